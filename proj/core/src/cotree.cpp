#include "d2/cotree.hpp"

#include <algorithm>

#include "d2/errors.hpp"

namespace d2 {

bool verify_p4_witness(const Graph& g, const P4Witness& w) {
    const auto& p = w.path;
    for (int v : p)
        if (v < 0 || v >= g.n()) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] == p[j]) return false;
    return g.has_edge(p[0], p[1]) && g.has_edge(p[1], p[2]) && g.has_edge(p[2], p[3]) &&
           !g.has_edge(p[0], p[2]) && !g.has_edge(p[1], p[3]) && !g.has_edge(p[0], p[3]);
}

int Cotree::add_leaf(int vertex) {
    Node nd;
    nd.kind = Kind::Leaf;
    nd.vertex = vertex;
    nodes_.push_back(std::move(nd));
    ++leaf_count_;
    return int(nodes_.size()) - 1;
}

int Cotree::add_internal(Kind kind, std::vector<int> children) {
    Node nd;
    nd.kind = kind;
    nd.children = std::move(children);
    nodes_.push_back(std::move(nd));
    return int(nodes_.size()) - 1;
}

VertexSet Cotree::leaves_under(int id) const {
    VertexSet out;
    std::vector<int> stack{id};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        const Node& nd = nodes_[cur];
        if (nd.kind == Kind::Leaf) {
            out.push_back(nd.vertex);
        } else {
            for (int c : nd.children) stack.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// connected components of g restricted to verts
std::vector<Bitset> components_within(const Graph& g, const Bitset& verts, bool complement) {
    std::vector<Bitset> comps;
    Bitset remaining = verts;
    int n = g.n();
    for (int s = remaining.find_first(); s != -1; s = remaining.find_first()) {
        Bitset comp(n), frontier(n);
        comp.set(s);
        frontier.set(s);
        remaining.reset(s);
        while (frontier.any()) {
            Bitset next(n);
            if (!complement) {
                frontier.for_each([&](int v) { next |= g.adj(v); });
                next &= remaining;
            } else {
                // union over v of (remaining \ N(v)) = remaining \ intersection of N(v)
                Bitset inter(n);
                inter.set_all();
                frontier.for_each([&](int v) { inter &= g.adj(v); });
                next = remaining;
                next.and_not(inter);
            }
            remaining.and_not(next);
            comp |= next;
            frontier = next;
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

// finds an induced P4 inside verts; caller guarantees one exists
P4Witness find_p4_within(const Graph& g, const Bitset& verts) {
    int n = g.n();
    for (const Pair& e : g.edges()) {
        int b = e[0], c = e[1];
        if (!verts.test(b) || !verts.test(c)) continue;
        Bitset a = g.adj(b);
        a &= verts;
        a.and_not(g.adj(c));
        a.reset(c);
        if (a.none()) continue;
        Bitset d = g.adj(c);
        d &= verts;
        d.and_not(g.adj(b));
        d.reset(b);
        if (d.none()) continue;
        P4Witness w{};
        bool found = false;
        a.for_each([&](int av) {
            if (found) return;
            Bitset rest = d;
            rest.and_not(g.adj(av));
            int dv = rest.find_first();
            if (dv != -1) {
                w.path = {av, b, c, dv};
                found = true;
            }
        });
        if (found) return w;
    }
    (void)n;
    throw VerificationError("no induced P4 found in a connected, co-connected graph");
}

struct Builder {
    const Graph& g;
    Cotree tree;
    bool failed = false;
    P4Witness witness{};

    int build(const Bitset& verts) {
        int cnt = verts.count();
        if (cnt == 1) return tree.add_leaf(verts.find_first());
        auto comps = components_within(g, verts, false);
        if (comps.size() >= 2) {
            std::vector<int> children;
            for (const Bitset& c : comps) {
                children.push_back(build(c));
                if (failed) return -1;
            }
            return tree.add_internal(Cotree::Kind::Union, std::move(children));
        }
        auto cocomps = components_within(g, verts, true);
        if (cocomps.size() >= 2) {
            std::vector<int> children;
            for (const Bitset& c : cocomps) {
                children.push_back(build(c));
                if (failed) return -1;
            }
            return tree.add_internal(Cotree::Kind::Join, std::move(children));
        }
        failed = true;
        witness = find_p4_within(g, verts);
        return -1;
    }
};

}  // namespace

std::variant<Cotree, P4Witness> build_cotree(const Graph& g) {
    if (g.n() < 1) throw PreconditionError("build_cotree requires n >= 1");
    Builder b{g};
    Bitset all(g.n());
    for (int i = 0; i < g.n(); ++i) all.set(i);
    int root = b.build(all);
    if (b.failed) return b.witness;
    b.tree.set_root(root);
    return std::move(b.tree);
}

Graph cotree_realize(const Cotree& t) {
    std::vector<Pair> edges;
    int n = t.leaf_count();
    // post-order: collect leaf sets; Join nodes add all cross pairs
    struct Rec {
        const Cotree& t;
        std::vector<Pair>& edges;
        VertexSet run(int id) {
            const auto& nd = t.node(id);
            if (nd.kind == Cotree::Kind::Leaf) return {nd.vertex};
            std::vector<VertexSet> childsets;
            childsets.reserve(nd.children.size());
            for (int c : nd.children) childsets.push_back(run(c));
            if (nd.kind == Cotree::Kind::Join) {
                for (size_t i = 0; i < childsets.size(); ++i)
                    for (size_t j = i + 1; j < childsets.size(); ++j)
                        for (int a : childsets[i])
                            for (int b : childsets[j])
                                edges.push_back({std::min(a, b), std::max(a, b)});
            }
            VertexSet merged;
            for (auto& cs : childsets) merged = set_union(merged, cs);
            return merged;
        }
    } rec{t, edges};
    rec.run(t.root());
    return Graph(n, std::move(edges));
}

bool cotree_valid(const Cotree& t, const Graph& g) {
    if (t.root() < 0 || t.leaf_count() != g.n()) return false;
    // alternation, arity, leaf bijection
    std::vector<int> seen(g.n(), 0);
    struct Chk {
        const Cotree& t;
        std::vector<int>& seen;
        bool ok = true;
        void run(int id, Cotree::Kind parent, bool has_parent) {
            const auto& nd = t.node(id);
            if (nd.kind == Cotree::Kind::Leaf) {
                if (nd.vertex < 0 || nd.vertex >= int(seen.size()) || seen[nd.vertex]++) ok = false;
                return;
            }
            if (nd.children.size() < 2) ok = false;
            if (has_parent && nd.kind == parent) ok = false;
            for (int c : nd.children) run(c, nd.kind, true);
        }
    } chk{t, seen};
    chk.run(t.root(), Cotree::Kind::Leaf, false);
    if (!chk.ok) return false;
    for (int s : seen)
        if (s != 1) return false;
    return cotree_realize(t) == g;
}

const char* to_string(SetKind k) { return k == SetKind::Clique ? "clique" : "independent"; }

namespace {

struct HomDp {
    const Cotree& t;
    // returns (clique size, independent size); choice stored for rebuild
    struct Val {
        int64_t clique = 0, indep = 0;
        int clique_child = -1, indep_child = -1;  // Union/Join argmax child
    };
    std::vector<Val> vals;

    void run(int id) {
        const auto& nd = t.node(id);
        Val v;
        if (nd.kind == Cotree::Kind::Leaf) {
            v.clique = v.indep = 1;
        } else {
            for (int c : nd.children) run(c);
            if (nd.kind == Cotree::Kind::Join) {
                for (int c : nd.children) v.clique += vals[c].clique;
                for (int c : nd.children)
                    if (v.indep_child == -1 || vals[c].indep > vals[v.indep_child].indep)
                        v.indep_child = c;
                v.indep = vals[v.indep_child].indep;
            } else {
                for (int c : nd.children) v.indep += vals[c].indep;
                for (int c : nd.children)
                    if (v.clique_child == -1 || vals[c].clique > vals[v.clique_child].clique)
                        v.clique_child = c;
                v.clique = vals[v.clique_child].clique;
            }
        }
        vals[id] = v;
    }

    void collect(int id, bool clique, VertexSet& out) {
        const auto& nd = t.node(id);
        if (nd.kind == Cotree::Kind::Leaf) {
            out.push_back(nd.vertex);
            return;
        }
        bool expand = (clique && nd.kind == Cotree::Kind::Join) ||
                      (!clique && nd.kind == Cotree::Kind::Union);
        if (expand) {
            for (int c : nd.children) collect(c, clique, out);
        } else {
            collect(clique ? vals[id].clique_child : vals[id].indep_child, clique, out);
        }
    }
};

}  // namespace

HomogeneousSet cotree_homogeneous_set(const Cotree& t, const Graph* g) {
    HomDp dp{t};
    dp.vals.resize(t.node_count());
    dp.run(t.root());
    const auto& rv = dp.vals[t.root()];
    HomogeneousSet result;
    result.kind = rv.clique >= rv.indep ? SetKind::Clique : SetKind::Independent;
    dp.collect(t.root(), result.kind == SetKind::Clique, result.set);
    std::sort(result.set.begin(), result.set.end());
    if (g) {
        for (size_t i = 0; i < result.set.size(); ++i)
            for (size_t j = i + 1; j < result.set.size(); ++j) {
                bool adj = g->has_edge(result.set[i], result.set[j]);
                if (adj != (result.kind == SetKind::Clique))
                    throw VerificationError("cotree homogeneous set fails against the graph");
            }
    }
    return result;
}

int ceil_sqrt(int64_t n) {
    if (n <= 0) return 0;
    int64_t k = int64_t(std::sqrt(double(n)));
    while (k * k < n) ++k;
    while (k > 0 && (k - 1) * (k - 1) >= n) --k;
    return int(k);
}

}  // namespace d2
