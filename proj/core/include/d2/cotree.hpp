#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "d2/hypergraph.hpp"

namespace d2 {

// Ordered vertices a-b-c-d with edges ab, bc, cd and non-edges ac, bd, ad.
struct P4Witness {
    std::array<int, 4> path;
};

bool verify_p4_witness(const Graph& g, const P4Witness& w);

// Recursive certificate of a cograph: Union and Join nodes alternate on every
// root-to-leaf path, internal nodes have >= 2 children, leaves biject with
// V(G), and the realized graph equals G.
class Cotree {
public:
    enum class Kind : uint8_t { Leaf, Union, Join };
    struct Node {
        Kind kind = Kind::Leaf;
        int vertex = -1;              // leaves only
        std::vector<int> children;    // internal only
    };

    int add_leaf(int vertex);
    int add_internal(Kind kind, std::vector<int> children);
    void set_root(int id) { root_ = id; }

    int root() const { return root_; }
    const Node& node(int id) const { return nodes_[id]; }
    int node_count() const { return int(nodes_.size()); }
    int leaf_count() const { return leaf_count_; }

    // ascending vertex list of the subtree rooted at id
    VertexSet leaves_under(int id) const;

private:
    std::vector<Node> nodes_;
    int root_ = -1;
    int leaf_count_ = 0;
};

// Cotree realizing G exactly, or a verified induced P4. Never both.
std::variant<Cotree, P4Witness> build_cotree(const Graph& g);

Graph cotree_realize(const Cotree& t);

// Structural + realization check against g.
bool cotree_valid(const Cotree& t, const Graph& g);

enum class SetKind { Clique, Independent };
const char* to_string(SetKind k);

struct HomogeneousSet {
    VertexSet set;
    SetKind kind = SetKind::Independent;
};

// The larger of (maximum clique, maximum independent set), by the standard
// cotree DP; ties prefer the clique. Size is always >= ceil(sqrt(n)).
// When g is provided the returned set is re-verified against it.
HomogeneousSet cotree_homogeneous_set(const Cotree& t, const Graph* g = nullptr);

// smallest k with k*k >= n
int ceil_sqrt(int64_t n);

}  // namespace d2
