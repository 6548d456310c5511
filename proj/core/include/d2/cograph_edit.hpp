#pragma once

#include <cstdint>
#include <vector>

#include "d2/cotree.hpp"
#include "d2/hypergraph.hpp"

namespace d2 {

struct EditSetGraph {
    std::vector<Pair> additions;
    std::vector<Pair> deletions;
    int64_t size() const { return int64_t(additions.size() + deletions.size()); }
};

struct CographEditResult {
    EditSetGraph edits;
    Graph edited;   // always induced P4-free
    Cotree cotree;  // cotree of `edited`
    bool optimal;   // true when the branch-and-bound ran (n <= exact_threshold)
};

// Turns G into a cograph by edge flips. For n <= exact_threshold the edit set
// has provably minimum size (branch-and-bound on induced P4 witnesses: every
// induced P4 forces a flip of one of its six pairs). Larger graphs get the
// peeling heuristic: split where the degree order has the widest gap,
// homogenize the cut the cheaper way, recurse.
CographEditResult cograph_edit(const Graph& g, int exact_threshold = 10);

Graph apply_graph_edits(const Graph& g, const EditSetGraph& edits);

}  // namespace d2
