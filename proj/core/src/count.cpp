#include "d2/count.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "d2/errors.hpp"
#include "d2/prng.hpp"

namespace d2 {

namespace {
std::atomic<int> g_threads{1};

int clamp_threads(int t, int64_t work_items) {
    if (t <= 0) t = g_threads.load();
    if (t <= 0) t = 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0) t = std::min<int>(t, int(hw));
    t = int(std::min<int64_t>(t, std::max<int64_t>(1, work_items)));
    return t;
}

// Runs fn(tid, begin, end) over a static split of [0, n); joins all workers.
template <typename F>
void run_partitioned(int threads, int n, F&& fn) {
    if (threads <= 1 || n <= 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int b = t * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, t, b, e] { fn(t, b, e); });
    }
    for (auto& th : pool) th.join();
}
}  // namespace

void set_default_threads(int t) { g_threads.store(t > 0 ? t : 1); }
int default_threads() { return g_threads.load(); }

bool verify_d2_witness(const Hypergraph3& h, const D2Witness& w) {
    const auto& f = w.four;
    if (!(0 <= f[0] && f[0] < f[1] && f[1] < f[2] && f[2] < f[3] && f[3] < h.n())) return false;
    int edges = h.has_edge(f[0], f[1], f[2]) + h.has_edge(f[0], f[1], f[3]) +
                h.has_edge(f[0], f[2], f[3]) + h.has_edge(f[1], f[2], f[3]);
    return edges == 2;
}

// The two kernels below classify 4-sets by the identity
//   [4-set spans exactly 2 edges] = C(k,2) - 3*C(k,3) + 6*C(k,4),
// summed as P - 3T + 6*N4 where
//   P  = pairs of edges sharing two vertices,
//   T  = 3-edge subsets of a 4-set  (pair loop sees 3T),
//   N4 = 4-sets with all four triples present (pair loop sees 6*N4).

int64_t count_induced_d2(const Hypergraph3& h, int threads) {
    int n = h.n();
    if (n < 4) return 0;
    const PairRows& rows = h.pair_rows();
    threads = clamp_threads(threads, n);

    std::vector<int64_t> partial(threads, 0);
    run_partitioned(threads, n, [&](int tid, int b, int e) {
        int64_t p = 0, t3 = 0, s4 = 0;
        for (int u = b; u < e; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const Bitset& row = rows.row(u, v);
                int64_t c = row.count();
                if (c == 0) continue;
                p += c * (c - 1) / 2;
                row.for_each([&](int w) {
                    const Bitset& ruw = rows.row(u, w);
                    const Bitset& rvw = rows.row(v, w);
                    // (x=w, L(w)-edge {u,v}): common-neighbor count in L(w)
                    t3 += Bitset::and_count(ruw, rvw);
                    // all four triples of {u,v,w,w'} present, w' > w
                    s4 += Bitset::and3_count_above(row, ruw, rvw, w);
                });
            }
        }
        partial[tid] = p - t3 + s4;
    });
    return std::accumulate(partial.begin(), partial.end(), int64_t{0});
}

std::vector<int64_t> count_induced_d2_per_vertex(const Hypergraph3& h, int threads) {
    int n = h.n();
    std::vector<int64_t> out(n, 0);
    if (n < 4) return out;
    const PairRows& rows = h.pair_rows();
    threads = clamp_threads(threads, n);

    // Channels per vertex: p = P(v), t = 3*T(v), s = 6*N4(v); the answer is
    // p - t + s. Every enumeration credits all four vertices of its 4-set.
    std::vector<std::vector<int64_t>> acc(threads);
    run_partitioned(threads, n, [&](int tid, int b, int e) {
        acc[tid].assign(n, 0);
        auto& a = acc[tid];
        for (int u = b; u < e; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const Bitset& row = rows.row(u, v);
                int64_t c = row.count();
                if (c == 0) continue;
                int64_t cc2 = c * (c - 1) / 2;
                a[u] += cc2;
                a[v] += cc2;
                if (c >= 2) row.for_each([&](int w) { a[w] += c - 1; });
                row.for_each([&](int w) {
                    const Bitset& ruw = rows.row(u, w);
                    const Bitset& rvw = rows.row(v, w);
                    // t-channel (negative sign): visit (x=w, edge {u,v})
                    int64_t tc = 0;
                    for (size_t i = 0; i < ruw.word_count(); ++i) {
                        uint64_t q = ruw.word(i) & rvw.word(i);
                        while (q) {
                            int y = int(i * 64) + std::countr_zero(q);
                            q &= q - 1;
                            a[y] -= 1;
                            ++tc;
                        }
                    }
                    a[u] -= tc;
                    a[v] -= tc;
                    a[w] -= tc;
                    // s4-channel (positive sign), w' > w
                    int64_t sc = 0;
                    size_t w0 = size_t(w >> 6);
                    for (size_t i = w0; i < row.word_count(); ++i) {
                        uint64_t q = row.word(i) & ruw.word(i) & rvw.word(i);
                        if (i == w0) q &= ~((uint64_t{2} << (w & 63)) - 1);
                        while (q) {
                            int wp = int(i * 64) + std::countr_zero(q);
                            q &= q - 1;
                            a[wp] += 1;
                            ++sc;
                        }
                    }
                    a[u] += sc;
                    a[v] += sc;
                    a[w] += sc;
                });
            }
        }
    });
    for (int t = 0; t < threads; ++t)
        if (!acc[t].empty())
            for (int v = 0; v < n; ++v) out[v] += acc[t][v];
    return out;
}

int64_t count_induced_d2_at(const Hypergraph3& h, int v, int threads) {
    if (v < 0 || v >= h.n()) throw PreconditionError("vertex out of range");
    if (h.n() < 4) return 0;
    return count_induced_d2_per_vertex(h, threads)[v];
}

int64_t count_induced_p4(const Graph& g, int threads) {
    int n = g.n();
    if (n < 4) return 0;
    const auto& edges = g.edges();
    threads = clamp_threads(threads, int64_t(edges.size()));

    std::vector<int64_t> partial(threads, 0);
    run_partitioned(threads, int(edges.size()), [&](int tid, int b, int e) {
        int64_t total = 0;
        for (int i = b; i < e; ++i) {
            // a-b-c-d induced: count at the central edge
            int bb = edges[i][0], cc = edges[i][1];
            Bitset a = g.adj(bb);
            a.and_not(g.adj(cc));
            a.reset(cc);
            Bitset d = g.adj(cc);
            d.and_not(g.adj(bb));
            d.reset(bb);
            int dsize = d.count();
            if (dsize == 0) continue;
            a.for_each([&](int av) { total += dsize - Bitset::and_count(d, g.adj(av)); });
        }
        partial[tid] = total;
    });
    return std::accumulate(partial.begin(), partial.end(), int64_t{0});
}

SampleEstimate estimate_induced_d2(const Hypergraph3& h, int64_t samples, uint64_t seed) {
    if (samples < 1) throw PreconditionError("estimate_induced_d2 requires samples >= 1");
    if (h.n() < 4) throw PreconditionError("estimate_induced_d2 requires n >= 4");
    int n = h.n();
    int64_t hits = 0;
    for (int64_t s = 0; s < samples; ++s) {
        // Floyd's algorithm: uniform 4-subset in exactly 4 draws
        std::array<int, 4> pick{};
        int k = 0;
        for (int j = 0; j < 4; ++j) {
            int i = n - 4 + j;
            int t = int(rng_below(seed, uint64_t(s) * 4 + j, uint64_t(i) + 1));
            bool dup = false;
            for (int q = 0; q < k; ++q) dup |= (pick[q] == t);
            pick[k++] = dup ? i : t;
        }
        std::sort(pick.begin(), pick.end());
        int ec = h.has_edge(pick[0], pick[1], pick[2]) + h.has_edge(pick[0], pick[1], pick[3]) +
                 h.has_edge(pick[0], pick[2], pick[3]) + h.has_edge(pick[1], pick[2], pick[3]);
        if (ec == 2) ++hits;
    }
    SampleEstimate est;
    est.samples = samples;
    est.seed = seed;
    double total = double(binom64(n, 4));
    est.point = double(hits) / double(samples) * total;
    est.half_width = std::sqrt(std::log(40.0) / (2.0 * double(samples))) * total;
    return est;
}

std::vector<D2Witness> find_d2_witnesses(const Hypergraph3& h, int64_t limit, uint64_t seed) {
    if (limit < 1) throw PreconditionError("find_d2_witnesses requires limit >= 1");
    std::vector<D2Witness> out;
    int n = h.n();
    if (n < 4) return out;
    const PairRows& rows = h.pair_rows();

    // Every induced D2's two edges share exactly one pair, so scanning pairs
    // finds each copy once. Scan order is an affine walk keyed by the seed.
    uint64_t npairs = uint64_t(n) * (n - 1) / 2;
    uint64_t start = rng_below(seed, 0, npairs);
    uint64_t step = rng_u64(seed, 1) | 1;
    while (std::gcd(step, npairs) != 1) step += 2;

    std::vector<std::array<int, 2>> pairs;
    pairs.reserve(size_t(npairs));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});

    for (uint64_t i = 0; i < npairs; ++i) {
        auto [u, v] = pairs[size_t((start + i * step) % npairs)];
        const Bitset& row = rows.row(u, v);
        if (row.count() < 2) continue;
        auto ws = row.to_vector();
        for (size_t a = 0; a < ws.size(); ++a) {
            for (size_t b = a + 1; b < ws.size(); ++b) {
                int w = ws[a], wp = ws[b];
                if (h.has_edge(u, w, wp) || h.has_edge(v, w, wp)) continue;
                std::array<int, 4> f{u, v, w, wp};
                std::sort(f.begin(), f.end());
                out.push_back(D2Witness{f});
                if (int64_t(out.size()) >= limit) return out;
            }
        }
    }
    return out;
}

}  // namespace d2
