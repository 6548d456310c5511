#include "d2/cograph_edit.hpp"

#include <algorithm>
#include <optional>

#include "d2/errors.hpp"

namespace d2 {

namespace {

// ---- exact branch and bound over flip sets ----

struct ExactState {
    int n;
    std::vector<std::vector<char>> adj;
    std::vector<char> frozen;   // pair id -> may not flip below this node
    std::vector<char> flipped;  // pair id -> currently flipped
    int cur = 0;
    int best;
    std::vector<Pair> best_flips;

    int pid(int a, int b) const {
        if (a > b) std::swap(a, b);
        return a * (2 * n - a - 1) / 2 + (b - a - 1);
    }

    std::optional<std::array<int, 4>> find_p4() const {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (b == a || !adj[a][b]) continue;
                for (int c = 0; c < n; ++c) {
                    if (c == a || c == b || !adj[b][c] || adj[a][c]) continue;
                    for (int d = a + 1; d < n; ++d) {
                        if (d == b || d == c) continue;
                        if (adj[c][d] && !adj[b][d] && !adj[a][d])
                            return std::array<int, 4>{a, b, c, d};
                    }
                }
            }
        return std::nullopt;
    }

    // greedy vertex-disjoint P4 packing; each one forces a distinct flip
    int packing_bound() const {
        std::vector<char> used(n, 0);
        int cnt = 0;
        for (int a = 0; a < n; ++a) {
            if (used[a]) continue;
            bool hit = false;
            for (int b = 0; b < n && !hit; ++b) {
                if (used[b] || b == a || !adj[a][b]) continue;
                for (int c = 0; c < n && !hit; ++c) {
                    if (used[c] || c == a || c == b || !adj[b][c] || adj[a][c]) continue;
                    for (int d = 0; d < n && !hit; ++d) {
                        if (used[d] || d == a || d == b || d == c) continue;
                        if (adj[c][d] && !adj[b][d] && !adj[a][d]) {
                            used[a] = used[b] = used[c] = used[d] = 1;
                            ++cnt;
                            hit = true;
                        }
                    }
                }
            }
        }
        return cnt;
    }

    void flip(int a, int b) {
        adj[a][b] ^= 1;
        adj[b][a] ^= 1;
    }

    void record_if_better() {
        if (cur < best) {
            best = cur;
            best_flips.clear();
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (flipped[pid(a, b)]) best_flips.push_back({a, b});
        }
    }

    void search() {
        if (cur + packing_bound() >= best) return;
        auto w = find_p4();
        if (!w) {
            record_if_better();
            return;
        }
        std::array<Pair, 6> pairs{};
        int np = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                pairs[np++] = {std::min((*w)[i], (*w)[j]), std::max((*w)[i], (*w)[j])};
        std::vector<int> newly_frozen;
        for (const Pair& p : pairs) {
            int id = pid(p[0], p[1]);
            if (frozen[id]) continue;
            frozen[id] = 1;
            flipped[id] = 1;
            flip(p[0], p[1]);
            ++cur;
            search();
            --cur;
            flip(p[0], p[1]);
            flipped[id] = 0;
            newly_frozen.push_back(id);  // stays frozen-unflipped for later branches
        }
        for (int id : newly_frozen) frozen[id] = 0;
    }
};

// ---- peeling heuristic ----

struct HeuristicCtx {
    const Graph& g;
    std::vector<Pair> additions, deletions;

    void homogenize_and_recurse(const Bitset& verts) {
        int cnt = verts.count();
        if (cnt <= 1) return;
        // components / co-components split for free
        for (int pass = 0; pass < 2; ++pass) {
            bool complement = pass == 1;
            auto comps = split(verts, complement);
            if (comps.size() >= 2) {
                for (const auto& c : comps) homogenize_and_recurse(c);
                return;
            }
        }
        // neither side splits: cut at the widest degree gap, homogenize cheap
        auto vs = verts.to_vector();
        std::vector<std::pair<int, int>> bydeg;  // (degree within verts, vertex)
        bydeg.reserve(vs.size());
        for (int v : vs) bydeg.push_back({Bitset::and_count(g.adj(v), verts), v});
        std::sort(bydeg.begin(), bydeg.end());
        int bestk = 1, bestgap = -1;
        for (int k = 1; k < cnt; ++k) {
            int gap = bydeg[k].first - bydeg[k - 1].first;
            int balance = std::min(k, cnt - k);
            int bestbalance = std::min(bestk, cnt - bestk);
            if (gap > bestgap || (gap == bestgap && balance > bestbalance)) {
                bestgap = gap;
                bestk = k;
            }
        }
        Bitset a(g.n()), b(g.n());
        for (int i = 0; i < bestk; ++i) a.set(bydeg[i].second);
        for (int i = bestk; i < cnt; ++i) b.set(bydeg[i].second);
        int64_t cross = 0;
        a.for_each([&](int v) { cross += Bitset::and_count(g.adj(v), b); });
        int64_t full = int64_t(bestk) * (cnt - bestk);
        bool make_complete = (full - cross) < cross;
        a.for_each([&](int u) {
            b.for_each([&](int v) {
                bool has = g.has_edge(u, v);
                if (make_complete && !has) additions.push_back({std::min(u, v), std::max(u, v)});
                if (!make_complete && has) deletions.push_back({std::min(u, v), std::max(u, v)});
            });
        });
        homogenize_and_recurse(a);
        homogenize_and_recurse(b);
    }

    std::vector<Bitset> split(const Bitset& verts, bool complement) {
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
};

}  // namespace

Graph apply_graph_edits(const Graph& g, const EditSetGraph& edits) {
    std::vector<Pair> es = g.edges();
    std::vector<Pair> del = edits.deletions;
    std::sort(del.begin(), del.end());
    std::vector<Pair> kept;
    kept.reserve(es.size() + edits.additions.size());
    for (const Pair& e : es)
        if (!std::binary_search(del.begin(), del.end(), e)) kept.push_back(e);
    for (const Pair& e : edits.additions) kept.push_back(e);
    return Graph(g.n(), std::move(kept));
}

CographEditResult cograph_edit(const Graph& g, int exact_threshold) {
    int n = g.n();
    CographEditResult result;
    result.optimal = n <= exact_threshold;

    // heuristic always runs; it seeds the exact search's upper bound
    HeuristicCtx h{g};
    Bitset all(n);
    for (int i = 0; i < n; ++i) all.set(i);
    if (n > 1) h.homogenize_and_recurse(all);
    std::vector<Pair> flips;
    flips.insert(flips.end(), h.additions.begin(), h.additions.end());
    flips.insert(flips.end(), h.deletions.begin(), h.deletions.end());

    if (result.optimal && n >= 4) {
        ExactState st;
        st.n = n;
        st.adj.assign(n, std::vector<char>(n, 0));
        for (const Pair& e : g.edges()) st.adj[e[0]][e[1]] = st.adj[e[1]][e[0]] = 1;
        st.frozen.assign(n * (n - 1) / 2, 0);
        st.flipped.assign(n * (n - 1) / 2, 0);
        st.best = int(flips.size());
        st.best_flips = flips;
        st.search();
        flips = st.best_flips;
    }

    for (const Pair& p : flips) {
        if (g.has_edge(p[0], p[1])) result.edits.deletions.push_back(p);
        else result.edits.additions.push_back(p);
    }
    std::sort(result.edits.additions.begin(), result.edits.additions.end());
    std::sort(result.edits.deletions.begin(), result.edits.deletions.end());
    result.edited = apply_graph_edits(g, result.edits);

    auto built = build_cotree(result.edited);
    if (std::holds_alternative<P4Witness>(built))
        throw VerificationError("cograph_edit produced a graph with an induced P4");
    result.cotree = std::get<Cotree>(std::move(built));
    return result;
}

}  // namespace d2
