#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "d2/cotree.hpp"
#include "d2/hypergraph.hpp"
#include "d2/rational.hpp"

namespace d2 {

// Output of the matching partition lemma: exceptional set S, parts V_1..V_t,
// a matching over part indices, and for each matched pair the primed subsets
// witnessing one-sided completeness (or emptiness).
struct CographPartition {
    struct MatchedPair {
        int i = -1, j = -1;       // part indices
        VertexSet primed_i, primed_j;
        bool complete = false;    // true: item 4(a); false: item 4(b)
    };
    VertexSet S;
    std::vector<VertexSet> parts;
    std::vector<MatchedPair> matching;
};

struct PartitionReport {
    bool pass = true;
    std::string failure;  // first violated item, empty when pass
};

// Recursive partition of a cograph: |S| <= (2*ceil(n/m)-3)*10*beta*m, every
// part size in [beta*m, m], non-matched part pairs homogeneous, matched pairs
// carry primed subsets of size >= beta^3*m/2 complete (or empty) to the
// opposite part. Requires 1 <= m < n, 0 < beta < 1, G a cograph.
// Postconditions are re-verified before returning.
CographPartition cograph_partition(const Graph& g, int64_t m, const Rational& beta);
CographPartition cograph_partition(const Graph& g, const Cotree& t, int64_t m,
                                   const Rational& beta);

// Re-derives all items of the partition lemma from scratch.
PartitionReport verify_cograph_partition(const Graph& g, const CographPartition& p, int64_t m,
                                         const Rational& beta);

enum class BipKind { Complete, Empty };
const char* to_string(BipKind k);

struct WeightedSplit {
    VertexSet I, J, L;
    BipKind kind = BipKind::Empty;
};

// Weighted split lemma: w(I), w(J) >= beta/2, w(L) < beta, and the bipartite
// graph between I and J uniformly complete or empty. Requires sum(w) = 1,
// every w(v) <= 1-beta, w(v) > 0, 0 < beta <= 1/3, G a cograph.
WeightedSplit weighted_split(const Graph& g, const std::vector<Rational>& w,
                             const Rational& beta);
WeightedSplit weighted_split(const Graph& g, const Cotree& t, const std::vector<Rational>& w,
                             const Rational& beta);

}  // namespace d2
