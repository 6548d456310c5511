#include "d2/cograph_partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "d2/errors.hpp"

namespace d2 {

namespace {

// Mutable peeling view of a cotree. Peels always detach a child of the
// current root, so cached subtree metadata below stays valid.
struct PeelArena {
    struct Nd {
        Cotree::Kind kind = Cotree::Kind::Leaf;
        int vertex = -1;
        std::vector<int> children;
        int64_t leaf_count = 0;
        int min_vertex = -1;
        Rational weight;
    };
    std::vector<Nd> nodes;

    int import(const Cotree& t, int id, const std::vector<Rational>* w) {
        const auto& src = t.node(id);
        Nd nd;
        nd.kind = src.kind;
        if (src.kind == Cotree::Kind::Leaf) {
            nd.vertex = src.vertex;
            nd.leaf_count = 1;
            nd.min_vertex = src.vertex;
            if (w) nd.weight = (*w)[src.vertex];
        } else {
            for (int c : src.children) {
                int cid = import(t, c, w);
                nd.children.push_back(cid);
                nd.leaf_count += nodes[cid].leaf_count;
                nd.min_vertex = nd.min_vertex < 0
                                    ? nodes[cid].min_vertex
                                    : std::min(nd.min_vertex, nodes[cid].min_vertex);
                if (w) nd.weight += nodes[cid].weight;
            }
        }
        nodes.push_back(std::move(nd));
        return int(nodes.size()) - 1;
    }

    VertexSet leaves(int id) const {
        VertexSet out;
        std::vector<int> stack{id};
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            const Nd& nd = nodes[cur];
            if (nd.kind == Cotree::Kind::Leaf) out.push_back(nd.vertex);
            else
                for (int c : nd.children) stack.push_back(c);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    struct Peel {
        int detached = -1;
        bool complete = false;  // bipartition type between detached and the rest
        int new_root = -1;
    };

    // Detaches the smallest child of root (by leaf count or by weight); ties
    // break on the child's minimum vertex.
    Peel peel(int root, bool by_weight) {
        Nd& r = nodes[root];
        int best = -1;
        for (int c : r.children) {
            if (best == -1) {
                best = c;
                continue;
            }
            const Nd &cn = nodes[c], &bn = nodes[best];
            bool smaller;
            if (by_weight)
                smaller = cn.weight < bn.weight ||
                          (cn.weight == bn.weight && cn.min_vertex < bn.min_vertex);
            else
                smaller = cn.leaf_count < bn.leaf_count ||
                          (cn.leaf_count == bn.leaf_count && cn.min_vertex < bn.min_vertex);
            if (smaller) best = c;
        }
        Peel p;
        p.detached = best;
        p.complete = r.kind == Cotree::Kind::Join;
        r.children.erase(std::find(r.children.begin(), r.children.end(), best));
        p.new_root = r.children.size() == 1 ? r.children[0] : root;
        return p;
    }
};

const Cotree& require_cotree(const std::variant<Cotree, P4Witness>& v) {
    if (std::holds_alternative<P4Witness>(v)) {
        const auto& w = std::get<P4Witness>(v).path;
        std::ostringstream os;
        os << "input graph is not a cograph: induced P4 (" << w[0] << "," << w[1] << "," << w[2]
           << "," << w[3] << ")";
        throw PreconditionError(os.str());
    }
    return std::get<Cotree>(v);
}

// ---- the matching partition lemma ----

struct L24Ctx {
    const Graph& g;
    PeelArena arena;
    int64_t m;
    Rational beta;
    Rational beta_m;
    CographPartition out;

    void add_to_S(const VertexSet& vs) {
        for (int v : vs) out.S.push_back(v);
    }

    void solve(int root, int64_t size) {
        // peel until the removed prefix reaches m vertices
        struct Step {
            VertexSet set;
            bool complete;
            int node;
        };
        std::vector<Step> steps;
        int64_t acc = 0;
        int cur = root;
        while (acc < m) {
            auto p = arena.peel(cur, false);
            Step st;
            st.node = p.detached;
            st.complete = p.complete;
            st.set = arena.leaves(p.detached);
            acc += int64_t(st.set.size());
            cur = p.new_root;
            steps.push_back(std::move(st));
        }
        int k = int(steps.size());
        int z1_node = steps.back().node;
        int64_t z1_size = int64_t(steps.back().set.size());
        int64_t z2_size = size - acc;

        // ordered X u Y with interval assignment; tag = complete-type?
        struct Elt {
            int v;
            bool complete;
            int interval = 0;  // 1-based
        };
        std::vector<Elt> ordered;
        for (int i = 0; i + 1 < k; ++i)
            for (int v : steps[i].set) ordered.push_back({v, steps[i].complete});
        int64_t q = int64_t(ordered.size());

        VertexSet x1, y1, x2, s_local, primed_p, primed_q;
        bool majority_complete = true;
        if (q > 0) {
            // r = ceil(1/beta) intervals, floor/ceil sizes, larger first
            BigInt bn = numerator(beta), bd = denominator(beta);
            int64_t r = ((bd + bn - 1) / bn).convert_to<int64_t>();
            int64_t small = q / r, nbig = q % r;
            int64_t idx = 0;
            for (int64_t i = 1; i <= r && idx < q; ++i) {
                int64_t len = small + (i <= nbig ? 1 : 0);
                for (int64_t j = 0; j < len; ++j) ordered[idx++].interval = int(i);
            }
            // majority class of I_1
            int64_t i1_size = small + (nbig > 0 ? 1 : 0);
            int64_t i1_complete = 0;
            for (const Elt& e : ordered)
                if (e.interval == 1 && e.complete) ++i1_complete;
            majority_complete = 2 * i1_complete >= i1_size;

            // s = largest interval where the minority class exceeds beta fraction
            std::vector<int64_t> isize(r + 1, 0), iq(r + 1, 0);
            for (const Elt& e : ordered) {
                ++isize[e.interval];
                if (e.complete != majority_complete) ++iq[e.interval];
            }
            int64_t s = 0;
            for (int64_t i = r; i >= 1; --i)
                if (Rational(iq[i]) > beta * isize[i]) {
                    s = i;
                    break;
                }

            for (const Elt& e : ordered) {
                bool is_p = e.complete == majority_complete;
                if (is_p) {
                    if (e.interval <= s - 1) x1.push_back(e.v);
                    else if (e.interval == s) s_local.push_back(e.v);
                    else x2.push_back(e.v);
                    if (e.interval == 1) primed_p.push_back(e.v);
                } else {
                    if (e.interval == 1) s_local.push_back(e.v);
                    else if (e.interval <= s) y1.push_back(e.v);
                    else s_local.push_back(e.v);
                    if (e.interval == s) primed_q.push_back(e.v);
                }
            }
            std::sort(x1.begin(), x1.end());
            std::sort(y1.begin(), y1.end());
            std::sort(x2.begin(), x2.end());
            std::sort(primed_p.begin(), primed_p.end());
            std::sort(primed_q.begin(), primed_q.end());
        }

        auto big_enough = [&](const VertexSet& vs) { return Rational(int64_t(vs.size())) >= beta_m; };

        bool keep_x1 = big_enough(x1), keep_y1 = big_enough(y1), keep_x2 = big_enough(x2);
        if (!keep_x1)
            for (int v : x1) s_local.push_back(v);
        if (!keep_y1)
            for (int v : y1) s_local.push_back(v);
        if (!keep_x2)
            for (int v : x2) s_local.push_back(v);

        int x1_idx = -1, y1_idx = -1;
        if (keep_x1) {
            x1_idx = int(out.parts.size());
            out.parts.push_back(x1);
        }
        if (keep_y1) {
            y1_idx = int(out.parts.size());
            out.parts.push_back(y1);
        }
        if (keep_x2) out.parts.push_back(x2);
        if (keep_x1 && keep_y1) {
            CographPartition::MatchedPair mp;
            mp.i = x1_idx;
            mp.j = y1_idx;
            mp.primed_i = primed_p;
            mp.primed_j = primed_q;
            mp.complete = majority_complete;
            out.matching.push_back(std::move(mp));
        }

        // Z_1 = last peeled set, Z_2 = what is left
        struct ZRef {
            int node;
            int64_t size;
        };
        for (ZRef z : {ZRef{z1_node, z1_size}, ZRef{cur, z2_size}}) {
            if (z.size == 0) continue;
            if (Rational(z.size) < beta_m) {
                add_to_S(arena.leaves(z.node));
            } else if (z.size <= m) {
                out.parts.push_back(arena.leaves(z.node));
            } else {
                solve(z.node, z.size);
            }
        }

        for (int v : s_local) out.S.push_back(v);
    }
};

}  // namespace

const char* to_string(BipKind k) { return k == BipKind::Complete ? "complete" : "empty"; }

CographPartition cograph_partition(const Graph& g, int64_t m, const Rational& beta) {
    auto built = build_cotree(g);
    return cograph_partition(g, require_cotree(built), m, beta);
}

CographPartition cograph_partition(const Graph& g, const Cotree& t, int64_t m,
                                   const Rational& beta) {
    int64_t n = g.n();
    if (m < 1 || m >= n) throw PreconditionError("cograph_partition requires 1 <= m < n");
    if (!(beta > 0 && beta < 1)) throw PreconditionError("cograph_partition requires 0 < beta < 1");

    L24Ctx ctx{g};
    ctx.m = m;
    ctx.beta = beta;
    ctx.beta_m = beta * m;
    int root = ctx.arena.import(t, t.root(), nullptr);
    ctx.solve(root, n);

    // canonical order: parts sorted by minimum vertex, S ascending
    std::sort(ctx.out.S.begin(), ctx.out.S.end());
    std::vector<int> perm(ctx.out.parts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return ctx.out.parts[a].front() < ctx.out.parts[b].front();
    });
    std::vector<int> where(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) where[perm[i]] = int(i);
    std::vector<VertexSet> parts(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) parts[i] = std::move(ctx.out.parts[perm[i]]);
    ctx.out.parts = std::move(parts);
    for (auto& mp : ctx.out.matching) {
        mp.i = where[mp.i];
        mp.j = where[mp.j];
        if (mp.i > mp.j) {
            std::swap(mp.i, mp.j);
            std::swap(mp.primed_i, mp.primed_j);
        }
    }
    std::sort(ctx.out.matching.begin(), ctx.out.matching.end(),
              [](const auto& a, const auto& b) { return a.i < b.i; });

    auto report = verify_cograph_partition(g, ctx.out, m, beta);
    if (!report.pass)
        throw VerificationError("cograph_partition postcondition failed: " + report.failure);
    return std::move(ctx.out);
}

PartitionReport verify_cograph_partition(const Graph& g, const CographPartition& p, int64_t m,
                                         const Rational& beta) {
    PartitionReport rep;
    auto fail = [&](const std::string& msg) {
        rep.pass = false;
        rep.failure = msg;
        return rep;
    };
    int n = g.n();

    // exact partition
    std::vector<int> cover(n, 0);
    for (int v : p.S) {
        if (v < 0 || v >= n) return fail("S contains an out-of-range vertex");
        ++cover[v];
    }
    for (const auto& part : p.parts) {
        if (part.empty()) return fail("empty part");
        if (!is_vertex_set(part, n)) return fail("part is not a canonical vertex set");
        for (int v : part) ++cover[v];
    }
    for (int v = 0; v < n; ++v)
        if (cover[v] != 1) return fail("S and parts do not partition V(G)");

    // item 1
    int64_t ceil_nm = (n + m - 1) / m;
    Rational s_bound = Rational(2 * ceil_nm - 3) * 10 * beta * m;
    if (Rational(int64_t(p.S.size())) > s_bound)
        return fail("item 1: |S| exceeds (2*ceil(n/m)-3)*10*beta*m");

    // item 2
    for (const auto& part : p.parts) {
        Rational sz(int64_t(part.size()));
        if (sz < beta * m || sz > Rational(m)) return fail("item 2: part size outside [beta*m, m]");
    }

    // matching structure
    std::vector<char> matched(p.parts.size(), 0);
    for (const auto& mp : p.matching) {
        if (mp.i < 0 || mp.j < 0 || mp.i >= int(p.parts.size()) || mp.j >= int(p.parts.size()) ||
            mp.i == mp.j)
            return fail("matching references invalid part indices");
        if (matched[mp.i]++ || matched[mp.j]++) return fail("matching is not a matching");
    }

    // part bitmasks
    std::vector<Bitset> mask(p.parts.size(), Bitset(n));
    for (size_t i = 0; i < p.parts.size(); ++i)
        for (int v : p.parts[i]) mask[i].set(v);

    auto cross_edges = [&](const VertexSet& a, const Bitset& bmask) {
        int64_t cnt = 0;
        for (int v : a) cnt += Bitset::and_count(g.adj(v), bmask);
        return cnt;
    };

    // item 3: non-matched pairs homogeneous
    std::vector<std::pair<int, int>> in_matching;
    for (const auto& mp : p.matching) in_matching.push_back({mp.i, mp.j});
    std::sort(in_matching.begin(), in_matching.end());
    for (size_t i = 0; i < p.parts.size(); ++i)
        for (size_t j = i + 1; j < p.parts.size(); ++j) {
            if (std::binary_search(in_matching.begin(), in_matching.end(),
                                   std::pair<int, int>(int(i), int(j))))
                continue;
            int64_t e = cross_edges(p.parts[i], mask[j]);
            int64_t full = int64_t(p.parts[i].size()) * int64_t(p.parts[j].size());
            if (e != 0 && e != full) return fail("item 3: a non-matched pair is not homogeneous");
        }

    // item 4: matched pairs carry large primed sets, complete/empty one-sided
    for (const auto& mp : p.matching) {
        const VertexSet &vi = p.parts[mp.i], &vj = p.parts[mp.j];
        if (!std::includes(vi.begin(), vi.end(), mp.primed_i.begin(), mp.primed_i.end()))
            return fail("item 4: primed set not inside its part");
        if (!std::includes(vj.begin(), vj.end(), mp.primed_j.begin(), mp.primed_j.end()))
            return fail("item 4: primed set not inside its part");
        Rational bound = beta * beta * beta * m / 2;
        if (Rational(int64_t(mp.primed_i.size())) < bound ||
            Rational(int64_t(mp.primed_j.size())) < bound)
            return fail("item 4: primed set smaller than beta^3*m/2");
        int64_t ei = cross_edges(mp.primed_i, mask[mp.j]);
        int64_t ej = cross_edges(mp.primed_j, mask[mp.i]);
        int64_t fi = int64_t(mp.primed_i.size()) * int64_t(vj.size());
        int64_t fj = int64_t(mp.primed_j.size()) * int64_t(vi.size());
        if (mp.complete) {
            if (ei != fi || ej != fj) return fail("item 4(a): primed sets not complete across");
        } else {
            if (ei != 0 || ej != 0) return fail("item 4(b): primed sets not empty across");
        }
    }
    return rep;
}

// ---- the weighted split lemma ----

WeightedSplit weighted_split(const Graph& g, const std::vector<Rational>& w,
                             const Rational& beta) {
    auto built = build_cotree(g);
    return weighted_split(g, require_cotree(built), w, beta);
}

WeightedSplit weighted_split(const Graph& g, const Cotree& t, const std::vector<Rational>& w,
                             const Rational& beta) {
    int n = g.n();
    if (int(w.size()) != n) throw PreconditionError("weight vector size must equal n");
    if (!(beta > 0 && beta <= Rational(1, 3)))
        throw PreconditionError("weighted_split requires 0 < beta <= 1/3");
    Rational total = 0;
    for (int v = 0; v < n; ++v) {
        if (!(w[v] > 0)) {
            std::ostringstream os;
            os << "weight of vertex " << v << " must be positive";
            throw PreconditionError(os.str());
        }
        if (w[v] > Rational(1) - beta) {
            std::ostringstream os;
            os << "weight of vertex " << v << " exceeds 1-beta";
            throw PreconditionError(os.str());
        }
        total += w[v];
    }
    if (total != 1) throw PreconditionError("weights must sum to exactly 1");

    PeelArena arena;
    int cur = arena.import(t, t.root(), &w);

    struct Step {
        int node;
        bool complete;
        Rational weight;
    };
    std::vector<Step> steps;
    Rational acc = 0;
    while (acc < beta) {
        auto p = arena.peel(cur, true);
        Step st{p.detached, p.complete, arena.nodes[p.detached].weight};
        acc += st.weight;
        cur = p.new_root;
        steps.push_back(std::move(st));
    }

    WeightedSplit out;
    const Step& last = steps.back();
    if (last.weight >= beta) {
        out.I = arena.leaves(last.node);
        out.J = arena.leaves(cur);
        out.kind = last.complete ? BipKind::Complete : BipKind::Empty;
        for (size_t i = 0; i + 1 < steps.size(); ++i)
            for (int v : arena.leaves(steps[i].node)) out.L.push_back(v);
    } else {
        Rational wplus = 0, wminus = 0;
        for (const Step& st : steps) (st.complete ? wplus : wminus) += st.weight;
        bool pick_complete = wplus >= wminus;
        for (const Step& st : steps) {
            auto vs = arena.leaves(st.node);
            auto& dst = (st.complete == pick_complete) ? out.I : out.L;
            for (int v : vs) dst.push_back(v);
        }
        out.J = arena.leaves(cur);
        out.kind = pick_complete ? BipKind::Complete : BipKind::Empty;
    }
    std::sort(out.I.begin(), out.I.end());
    std::sort(out.L.begin(), out.L.end());

    // verify postconditions before returning
    auto weight_of = [&](const VertexSet& vs) {
        Rational s = 0;
        for (int v : vs) s += w[v];
        return s;
    };
    Rational wi = weight_of(out.I), wj = weight_of(out.J), wl = weight_of(out.L);
    if (wi < beta / 2 || wj < beta / 2 || wl >= beta)
        throw VerificationError("weighted_split postcondition failed on weights");
    Bitset jmask(n);
    for (int v : out.J) jmask.set(v);
    int64_t e = 0;
    for (int v : out.I) e += Bitset::and_count(g.adj(v), jmask);
    int64_t full = int64_t(out.I.size()) * int64_t(out.J.size());
    if ((out.kind == BipKind::Complete && e != full) || (out.kind == BipKind::Empty && e != 0))
        throw VerificationError("weighted_split postcondition failed on the I-J bipartite graph");
    return out;
}

}  // namespace d2
