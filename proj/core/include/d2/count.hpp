#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "d2/hypergraph.hpp"

namespace d2 {

// Global default used by the parallel counting kernels when threads == 0.
// Results are bit-identical regardless of thread count (integer reductions).
void set_default_threads(int t);
int default_threads();

// A 4-set spanning exactly 2 hyperedges. Any two triples inside a 4-set share
// two vertices, so edge count 2 fully characterizes the induced pattern.
struct D2Witness {
    std::array<int, 4> four;
    bool operator==(const D2Witness& o) const { return four == o.four; }
    bool operator<(const D2Witness& o) const { return four < o.four; }
};

bool verify_d2_witness(const Hypergraph3& h, const D2Witness& w);

// Exact number of 4-sets spanning exactly 2 edges. n < 4 gives 0.
// Pair-row kernel: P - 3*T + 6*N4 where P counts pairs of edges sharing two
// vertices, T triples of edges in a 4-set, N4 fully-covered 4-sets.
int64_t count_induced_d2(const Hypergraph3& h, int threads = 0);

// Per-vertex counts: out[v] = number of induced D2 whose 4-set contains v.
std::vector<int64_t> count_induced_d2_per_vertex(const Hypergraph3& h, int threads = 0);

int64_t count_induced_d2_at(const Hypergraph3& h, int v, int threads = 0);

// Exact number of 4-sets of G inducing a path on 4 vertices.
int64_t count_induced_p4(const Graph& g, int threads = 0);

struct SampleEstimate {
    double point = 0.0;       // estimated induced-D2 count
    int64_t samples = 0;
    uint64_t seed = 0;
    double half_width = 0.0;  // Hoeffding 95% half-width scaled by C(n,4)
};

// Uniform i.i.d. 4-subset sampling with the counter PRNG; deterministic per
// (seed); point = hit_fraction * C(n,4).
SampleEstimate estimate_induced_d2(const Hypergraph3& h, int64_t samples, uint64_t seed);

// Up to `limit` distinct witnesses, scan order keyed by seed. A full scan
// returns empty iff H is induced D2-free.
std::vector<D2Witness> find_d2_witnesses(const Hypergraph3& h, int64_t limit, uint64_t seed);

}  // namespace d2
