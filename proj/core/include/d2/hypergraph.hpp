#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "d2/bitset.hpp"
#include "d2/rational.hpp"

namespace d2 {

// Vertex sets are canonical strictly increasing sequences. Operations reject
// unsorted input rather than silently sorting, so downstream tie-breaking is
// reproducible.
using VertexSet = std::vector<int>;

using Triple = std::array<int, 3>;
using Pair = std::array<int, 2>;

bool is_vertex_set(const VertexSet& xs, int n);
void require_vertex_set(const VertexSet& xs, int n, const char* name);
void require_disjoint(const VertexSet& a, const VertexSet& b, const char* what);
VertexSet full_vertex_set(int n);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);

// 2-uniform companion of Hypergraph3; holds link graphs and cographs.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Pair> edges);

    int n() const { return n_; }
    int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }
    const std::vector<Pair>& edges() const { return edges_; }
    const Bitset& adj(int v) const { return adj_[v]; }
    bool has_edge(int a, int b) const { return a != b && adj_[a].test(b); }

    Graph complement() const;
    // induced subgraph; vertex i of the result is xs[i]
    Graph induced(const VertexSet& xs) const;

    Rational density() const;  // e / C(n,2), requires n >= 2

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Pair> edges_;
    std::vector<Bitset> adj_;
};

// Word-parallel counting index: one bit row per unordered vertex pair, bit w
// set iff {u,v,w} is an edge.
class PairRows {
public:
    PairRows(int n, const std::vector<Triple>& edges);
    const Bitset& row(int u, int v) const { return rows_[pair_index(u, v)]; }
    int codegree(int u, int v) const { return rows_[pair_index(u, v)].count(); }

private:
    size_t pair_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        return size_t(u) * (2 * n_ - u - 1) / 2 + size_t(v - u - 1);
    }
    int n_;
    std::vector<Bitset> rows_;
};

class Hypergraph3 {
public:
    // Counting kernels materialize C(n,2) bit rows; refuse beyond this.
    static constexpr int kPairRowLimit = 1200;
    // complement() materializes C(n,3) triples; refuse beyond this.
    static constexpr int kComplementLimit = 600;

    Hypergraph3() = default;
    // edges must be ascending triples, sorted, duplicate-free, all < n
    Hypergraph3(int n, std::vector<Triple> edges);
    // accepts triples in any vertex order / edge order, canonicalizes
    static Hypergraph3 from_triples(int n, std::vector<Triple> edges);

    int n() const { return n_; }
    int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }
    const std::vector<Triple>& edges() const { return edges_; }
    bool has_edge(int a, int b, int c) const;
    int64_t degree(int v) const;            // number of edges containing v
    std::vector<int64_t> degrees() const;   // all of them in one pass

    Hypergraph3 complement() const;
    // induced subhypergraph; vertex i of the result is xs[i]
    Hypergraph3 induced(const VertexSet& xs) const;

    // built on first use, cached; throws PreconditionError above kPairRowLimit
    const PairRows& pair_rows() const;

    bool operator==(const Hypergraph3& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Triple> edges_;
    // copies share the cache; contents are a pure function of (n_, edges_)
    mutable std::shared_ptr<const PairRows> rows_;
    std::shared_ptr<std::mutex> rows_mutex_ = std::make_shared<std::mutex>();
};

// ---- density functionals ----

// d(V(H)) = e(H) / C(n,3); requires n >= 3
Rational density_hypergraph(const Hypergraph3& h);

// transversal edges over |X||Y||Z|; X,Y,Z pairwise disjoint and nonempty
int64_t edge_count_triple(const Hypergraph3& h, const VertexSet& x, const VertexSet& y,
                          const VertexSet& z);
Rational density_triple(const Hypergraph3& h, const VertexSet& x, const VertexSet& y,
                        const VertexSet& z);

// edges with two vertices in X and one in Y over C(|X|,2)|Y|; |X|>=2, |Y|>=1
int64_t edge_count_pair_xxy(const Hypergraph3& h, const VertexSet& x, const VertexSet& y);
Rational density_pair_xxy(const Hypergraph3& h, const VertexSet& x, const VertexSet& y);

// bipartite graph density e(X,Y)/(|X||Y|)
int64_t graph_edge_count_pair(const Graph& g, const VertexSet& x, const VertexSet& y);
Rational graph_density_pair(const Graph& g, const VertexSet& x, const VertexSet& y);

// graph on h.n() vertices (v isolated) with {a,b} iff {v,a,b} in E(H)
Graph link_graph(const Hypergraph3& h, int v);

enum class Homogeneity { Dense, Sparse, Neither };

const char* to_string(Homogeneity k);

struct HomogeneityVerdict {
    Homogeneity kind = Homogeneity::Neither;
    Rational dxxY;
    Rational dyyX;
};

// Dense iff d(X,X,Y), d(Y,Y,X) >= 1-eps; Sparse iff both <= eps.
// Requires |X|,|Y| >= 2, X,Y disjoint, 0 <= eps <= 1/2.
HomogeneityVerdict homogeneity_verdict(const Hypergraph3& h, const VertexSet& x,
                                       const VertexSet& y, const Rational& eps);

}  // namespace d2
