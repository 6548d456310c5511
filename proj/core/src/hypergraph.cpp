#include "d2/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "d2/errors.hpp"

namespace d2 {

bool is_vertex_set(const VertexSet& xs, int n) {
    for (size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 0 || xs[i] >= n) return false;
        if (i > 0 && xs[i] <= xs[i - 1]) return false;
    }
    return true;
}

void require_vertex_set(const VertexSet& xs, int n, const char* name) {
    if (!is_vertex_set(xs, n)) {
        std::ostringstream os;
        os << name << " must be a strictly increasing sequence of vertices < " << n;
        throw PreconditionError(os.str());
    }
}

void require_disjoint(const VertexSet& a, const VertexSet& b, const char* what) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            std::ostringstream os;
            os << what << " must be disjoint (both contain " << a[i] << ")";
            throw PreconditionError(os.str());
        }
        if (a[i] < b[j]) ++i; else ++j;
    }
}

VertexSet full_vertex_set(int n) {
    VertexSet v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// ---- Graph ----

Graph::Graph(int n, std::vector<Pair> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw PreconditionError("graph vertex count must be non-negative");
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n_, Bitset(n_));
    Pair prev{-1, -1};
    for (const Pair& e : edges_) {
        if (e[0] < 0 || e[1] >= n_ || e[0] >= e[1])
            throw PreconditionError("graph edge endpoints must satisfy 0 <= a < b < n");
        if (e == prev) throw PreconditionError("duplicate graph edge");
        prev = e;
        adj_[e[0]].set(e[1]);
        adj_[e[1]].set(e[0]);
    }
}

Graph Graph::complement() const {
    std::vector<Pair> es;
    es.reserve(size_t(n_) * (n_ - 1) / 2 - edges_.size());
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (!adj_[a].test(b)) es.push_back({a, b});
    return Graph(n_, std::move(es));
}

Graph Graph::induced(const VertexSet& xs) const {
    require_vertex_set(xs, n_, "induced vertex set");
    std::vector<int> pos(n_, -1);
    for (size_t i = 0; i < xs.size(); ++i) pos[xs[i]] = int(i);
    std::vector<Pair> es;
    for (const Pair& e : edges_)
        if (pos[e[0]] >= 0 && pos[e[1]] >= 0) es.push_back({pos[e[0]], pos[e[1]]});
    return Graph(int(xs.size()), std::move(es));
}

Rational Graph::density() const {
    if (n_ < 2) throw PreconditionError("graph density requires n >= 2");
    return Rational(BigInt(edge_count()), binom(n_, 2));
}

// ---- PairRows ----

PairRows::PairRows(int n, const std::vector<Triple>& edges) : n_(n) {
    rows_.assign(size_t(n) * (n - 1) / 2, Bitset(n));
    for (const Triple& e : edges) {
        rows_[pair_index(e[0], e[1])].set(e[2]);
        rows_[pair_index(e[0], e[2])].set(e[1]);
        rows_[pair_index(e[1], e[2])].set(e[0]);
    }
}

// ---- Hypergraph3 ----

Hypergraph3::Hypergraph3(int n, std::vector<Triple> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw PreconditionError("vertex count must be non-negative");
    Triple prev{-1, -1, -1};
    for (const Triple& e : edges_) {
        if (!(0 <= e[0] && e[0] < e[1] && e[1] < e[2] && e[2] < n_))
            throw PreconditionError("hyperedge must satisfy 0 <= a < b < c < n");
        if (!(prev < e)) throw PreconditionError("hyperedges must be sorted and duplicate-free");
        prev = e;
    }
}

Hypergraph3 Hypergraph3::from_triples(int n, std::vector<Triple> edges) {
    for (Triple& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph3(n, std::move(edges));
}

bool Hypergraph3::has_edge(int a, int b, int c) const {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return std::binary_search(edges_.begin(), edges_.end(), t);
}

int64_t Hypergraph3::degree(int v) const {
    int64_t d = 0;
    for (const Triple& e : edges_)
        if (e[0] == v || e[1] == v || e[2] == v) ++d;
    return d;
}

std::vector<int64_t> Hypergraph3::degrees() const {
    std::vector<int64_t> d(n_, 0);
    for (const Triple& e : edges_) {
        ++d[e[0]];
        ++d[e[1]];
        ++d[e[2]];
    }
    return d;
}

Hypergraph3 Hypergraph3::complement() const {
    if (n_ > kComplementLimit)
        throw PreconditionError("complement() is limited to n <= " +
                                std::to_string(kComplementLimit));
    std::vector<Triple> es;
    size_t total = size_t(binom64(n_, 3));
    es.reserve(total - edges_.size());
    auto it = edges_.begin();
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            for (int c = b + 1; c < n_; ++c) {
                Triple t{a, b, c};
                if (it != edges_.end() && *it == t) {
                    ++it;
                } else {
                    es.push_back(t);
                }
            }
    return Hypergraph3(n_, std::move(es));
}

Hypergraph3 Hypergraph3::induced(const VertexSet& xs) const {
    require_vertex_set(xs, n_, "induced vertex set");
    std::vector<int> pos(n_, -1);
    for (size_t i = 0; i < xs.size(); ++i) pos[xs[i]] = int(i);
    std::vector<Triple> es;
    for (const Triple& e : edges_)
        if (pos[e[0]] >= 0 && pos[e[1]] >= 0 && pos[e[2]] >= 0)
            es.push_back({pos[e[0]], pos[e[1]], pos[e[2]]});
    return Hypergraph3(int(xs.size()), std::move(es));
}

const PairRows& Hypergraph3::pair_rows() const {
    if (n_ > kPairRowLimit)
        throw PreconditionError("pair-row index is limited to n <= " +
                                std::to_string(kPairRowLimit));
    std::lock_guard<std::mutex> lk(*rows_mutex_);
    if (!rows_) rows_ = std::make_shared<const PairRows>(n_, edges_);
    return *rows_;
}

// ---- densities ----

Rational density_hypergraph(const Hypergraph3& h) {
    if (h.n() < 3) throw PreconditionError("density requires n >= 3");
    return Rational(BigInt(h.edge_count()), binom(h.n(), 3));
}

namespace {

// class labels: 0 = outside, 1..3 = which set
std::vector<uint8_t> label_classes(int n, const VertexSet& x, const VertexSet& y,
                                   const VertexSet* z) {
    std::vector<uint8_t> lab(n, 0);
    for (int v : x) lab[v] = 1;
    for (int v : y) lab[v] = 2;
    if (z)
        for (int v : *z) lab[v] = 3;
    return lab;
}

}  // namespace

int64_t edge_count_triple(const Hypergraph3& h, const VertexSet& x, const VertexSet& y,
                          const VertexSet& z) {
    auto lab = label_classes(h.n(), x, y, &z);
    int64_t cnt = 0;
    for (const Triple& e : h.edges()) {
        uint8_t a = lab[e[0]], b = lab[e[1]], c = lab[e[2]];
        if (a && b && c && a != b && a != c && b != c) ++cnt;
    }
    return cnt;
}

Rational density_triple(const Hypergraph3& h, const VertexSet& x, const VertexSet& y,
                        const VertexSet& z) {
    require_vertex_set(x, h.n(), "X");
    require_vertex_set(y, h.n(), "Y");
    require_vertex_set(z, h.n(), "Z");
    if (x.empty() || y.empty() || z.empty())
        throw PreconditionError("density_triple requires nonempty X, Y, Z");
    require_disjoint(x, y, "X and Y");
    require_disjoint(x, z, "X and Z");
    require_disjoint(y, z, "Y and Z");
    int64_t cnt = edge_count_triple(h, x, y, z);
    return Rational(BigInt(cnt),
                    BigInt(int64_t(x.size())) * int64_t(y.size()) * int64_t(z.size()));
}

int64_t edge_count_pair_xxy(const Hypergraph3& h, const VertexSet& x, const VertexSet& y) {
    auto lab = label_classes(h.n(), x, y, nullptr);
    int64_t cnt = 0;
    for (const Triple& e : h.edges()) {
        uint8_t a = lab[e[0]], b = lab[e[1]], c = lab[e[2]];
        int nx = (a == 1) + (b == 1) + (c == 1);
        int ny = (a == 2) + (b == 2) + (c == 2);
        if (nx == 2 && ny == 1) ++cnt;
    }
    return cnt;
}

Rational density_pair_xxy(const Hypergraph3& h, const VertexSet& x, const VertexSet& y) {
    require_vertex_set(x, h.n(), "X");
    require_vertex_set(y, h.n(), "Y");
    if (x.size() < 2) throw PreconditionError("density_pair_xxy requires |X| >= 2");
    if (y.empty()) throw PreconditionError("density_pair_xxy requires |Y| >= 1");
    require_disjoint(x, y, "X and Y");
    int64_t cnt = edge_count_pair_xxy(h, x, y);
    return Rational(BigInt(cnt), binom(int64_t(x.size()), 2) * int64_t(y.size()));
}

int64_t graph_edge_count_pair(const Graph& g, const VertexSet& x, const VertexSet& y) {
    Bitset ybits(g.n());
    for (int v : y) ybits.set(v);
    int64_t cnt = 0;
    for (int v : x) cnt += Bitset::and_count(g.adj(v), ybits);
    return cnt;
}

Rational graph_density_pair(const Graph& g, const VertexSet& x, const VertexSet& y) {
    require_vertex_set(x, g.n(), "X");
    require_vertex_set(y, g.n(), "Y");
    if (x.empty() || y.empty())
        throw PreconditionError("graph_density_pair requires nonempty X, Y");
    require_disjoint(x, y, "X and Y");
    return Rational(BigInt(graph_edge_count_pair(g, x, y)),
                    BigInt(int64_t(x.size())) * int64_t(y.size()));
}

Graph link_graph(const Hypergraph3& h, int v) {
    if (v < 0 || v >= h.n()) throw PreconditionError("link vertex out of range");
    std::vector<Pair> es;
    for (const Triple& e : h.edges()) {
        if (e[0] == v) es.push_back({e[1], e[2]});
        else if (e[1] == v) es.push_back({e[0], e[2]});
        else if (e[2] == v) es.push_back({e[0], e[1]});
    }
    return Graph(h.n(), std::move(es));
}

const char* to_string(Homogeneity k) {
    switch (k) {
        case Homogeneity::Dense: return "dense";
        case Homogeneity::Sparse: return "sparse";
        default: return "neither";
    }
}

HomogeneityVerdict homogeneity_verdict(const Hypergraph3& h, const VertexSet& x,
                                       const VertexSet& y, const Rational& eps) {
    if (eps < 0 || eps > Rational(1, 2))
        throw PreconditionError("homogeneity_verdict requires 0 <= eps <= 1/2");
    if (x.size() < 2 || y.size() < 2)
        throw PreconditionError("homogeneity_verdict requires |X|, |Y| >= 2");
    HomogeneityVerdict v;
    v.dxxY = density_pair_xxy(h, x, y);
    v.dyyX = density_pair_xxy(h, y, x);
    Rational hi = Rational(1) - eps;
    if (v.dxxY >= hi && v.dyyX >= hi) v.kind = Homogeneity::Dense;
    else if (v.dxxY <= eps && v.dyyX <= eps) v.kind = Homogeneity::Sparse;
    else v.kind = Homogeneity::Neither;
    return v;
}

// ---- rational string helpers (declared in rational.hpp) ----

Rational parse_rational(const std::string& s) {
    auto bad = [&] { throw PreconditionError("cannot parse rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) bad();
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            size_t frac = s.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+") bad();
            BigInt num(digits);
            BigInt den = 1;
            for (size_t i = 0; i < frac; ++i) den *= 10;
            return Rational(num, den);
        }
        return Rational(BigInt(s));
    } catch (const std::exception&) {
        bad();
    }
    return Rational();  // unreachable
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

}  // namespace d2
