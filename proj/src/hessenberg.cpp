#include "hessmult/hessenberg.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hessmult {

HessFunction::HessFunction(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    for (int i = 1; i <= n; ++i) {
        int v = values_[static_cast<std::size_t>(i) - 1];
        if (v < i)
            throw std::invalid_argument("Hessenberg function: h(" + std::to_string(i) +
                                        ") = " + std::to_string(v) + " < " + std::to_string(i));
        if (v > n)
            throw std::invalid_argument("Hessenberg function: h(" + std::to_string(i) +
                                        ") = " + std::to_string(v) + " > n");
        if (i > 1 && v < values_[static_cast<std::size_t>(i) - 2])
            throw std::invalid_argument("Hessenberg function: values must be nondecreasing");
    }
}

HessFunction HessFunction::parse(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("Hessenberg function: bad integer '" +
                                        std::string(tok) + "'");
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (values.empty())
        throw std::invalid_argument("Hessenberg function: empty value list");
    return HessFunction(std::move(values));
}

HessFunction HessFunction::complete(int n) {
    return HessFunction(std::vector<int>(static_cast<std::size_t>(n), n));
}

HessFunction HessFunction::minimal(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return HessFunction(std::move(v));
}

std::string HessFunction::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << values_[i];
    }
    return os.str();
}

std::vector<RootPair> hess_negative_roots(const HessFunction& h) {
    std::vector<RootPair> out;
    for (int j = 1; j <= h.n(); ++j)
        for (int i = j + 1; i <= h(j); ++i) out.push_back({i, j});
    std::sort(out.begin(), out.end());
    return out;
}

IdealSeries ideal_of(const HessFunction& h) {
    IdealSeries out;
    const int n = h.n();
    for (int j = 1; j <= n; ++j)
        for (int i = h(j) + 1; i <= n; ++i) out.ideal.push_back({i, j});
    std::sort(out.ideal.begin(), out.ideal.end());

    // I_j = (I_{j-1} + I) restricted to negative roots.  Two negative roots
    // sum to a negative root only by chaining: (i, m) + (m, l) = (i, l), so
    // I_j collects the spans of chains of j ideal roots.
    std::vector<RootPair> current = out.ideal;
    while (!current.empty()) {
        out.series.push_back(current);
        std::set<RootPair> next;
        for (const RootPair& a : current)
            for (const RootPair& b : out.ideal) {
                if (a.j == b.i) next.insert({a.i, b.j});
                if (b.j == a.i) next.insert({b.i, a.j});
            }
        current.assign(next.begin(), next.end());
    }
    out.height = static_cast<int>(out.series.size());
    return out;
}

std::vector<RootPair> h_inversions(const Perm& w, const HessFunction& h) {
    if (w.n() != h.n()) throw std::invalid_argument("h_inversions: size mismatch");
    std::vector<RootPair> out;
    for (int j = 1; j <= h.n(); ++j)
        for (int i = j + 1; i <= h(j); ++i)
            if (w(i) < w(j)) out.push_back({i, j});
    return out;
}

int h_inversion_count(std::span<const int> one_line, const HessFunction& h) {
    int count = 0;
    for (int j = 1; j <= h.n(); ++j) {
        int wj = one_line[static_cast<std::size_t>(j) - 1];
        for (int i = j + 1; i <= h(j); ++i)
            if (one_line[static_cast<std::size_t>(i) - 1] < wj) ++count;
    }
    return count;
}

IncompGraph incomparability_graph(const HessFunction& h) {
    IncompGraph g;
    g.n = h.n();
    g.adj.assign(static_cast<std::size_t>(g.n) + 1, 0);
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= h(i); ++j) {
            g.edges.emplace_back(i, j);
            g.adj[static_cast<std::size_t>(i)] |= 1u << (j - 1);
            g.adj[static_cast<std::size_t>(j)] |= 1u << (i - 1);
        }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::string IncompGraph::to_json_string() const {
    std::ostringstream os;
    os << "{\"edges\":[";
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (e) os << ',';
        os << '[' << edges[e].first << ',' << edges[e].second << ']';
    }
    os << "],\"n\":" << n << '}';
    return os.str();
}

namespace {

void extend_independent(const IncompGraph& g, std::vector<int>& cur, int from, int k,
                        std::vector<SinkSet>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back({cur, sink_degree(g, cur)});
        return;
    }
    for (int v = from; v <= g.n; ++v) {
        bool ok = true;
        for (int u : cur)
            if (g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(v);
        extend_independent(g, cur, v + 1, k, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SinkSet> sink_sets(const IncompGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("sink_sets: k must be >= 1");
    std::vector<SinkSet> out;
    std::vector<int> cur;
    extend_independent(g, cur, 1, k, out);
    return out;
}

std::vector<SinkSet> sink_sets(const HessFunction& h, int k) {
    return sink_sets(incomparability_graph(h), k);
}

int max_sink_size(const IncompGraph& g) {
    int best = 0;
    // n <= cap keeps full enumeration cheap.
    for (int k = 1; k <= g.n; ++k) {
        if (sink_sets(g, k).empty()) break;
        best = k;
    }
    return best;
}

int max_sink_size(const HessFunction& h) {
    return max_sink_size(incomparability_graph(h));
}

int sink_degree(const IncompGraph& g, const std::vector<int>& T) {
    for (std::size_t a = 0; a < T.size(); ++a)
        for (std::size_t b = a + 1; b < T.size(); ++b)
            if (g.adjacent(T[a], T[b]))
                throw std::invalid_argument("sink_degree: set is not independent");
    int deg = 0;
    for (const auto& [a, b] : g.edges)
        if (std::find(T.begin(), T.end(), b) != T.end()) ++deg;
    return deg;
}

SinkDeletion delete_sinks(const HessFunction& h, const std::vector<int>& T) {
    const IncompGraph g = incomparability_graph(h);
    if (!std::is_sorted(T.begin(), T.end()))
        throw std::invalid_argument("delete_sinks: vertex set must be sorted");
    (void)sink_degree(g, T);  // independence check

    SinkDeletion out;
    out.relabel_table.assign(static_cast<std::size_t>(h.n()) + 1, 0);
    int next = 0;
    for (int j = 1; j <= h.n(); ++j) {
        if (std::find(T.begin(), T.end(), j) != T.end()) continue;
        out.relabel_table[static_cast<std::size_t>(j)] = ++next;
    }

    const int m = h.n() - static_cast<int>(T.size());
    std::vector<int> values(static_cast<std::size_t>(m));
    for (int a = 1; a <= m; ++a) values[static_cast<std::size_t>(a) - 1] = a;
    for (const auto& [a, b] : g.edges) {
        int ra = out.relabel(a);
        int rb = out.relabel(b);
        if (ra == 0 || rb == 0) continue;
        values[static_cast<std::size_t>(ra) - 1] =
            std::max(values[static_cast<std::size_t>(ra) - 1], rb);
    }
    out.reduced = HessFunction(std::move(values));
    return out;
}

std::vector<RootPair> sink_chain_roots(const std::vector<int>& T) {
    if (!std::is_sorted(T.begin(), T.end()))
        throw std::invalid_argument("sink_chain_roots: vertex set must be sorted");
    std::vector<RootPair> out;
    for (std::size_t i = 0; i + 1 < T.size(); ++i) out.push_back({T[i + 1], T[i]});
    return out;
}

namespace {

void extend_chain(const std::vector<std::uint32_t>& member, int n, std::vector<int>& q, int k,
                  std::vector<std::vector<RootPair>>& out) {
    if (static_cast<int>(q.size()) == k + 1) {
        std::vector<RootPair> chain;
        for (std::size_t i = 0; i + 1 < q.size(); ++i) chain.push_back({q[i + 1], q[i]});
        out.push_back(std::move(chain));
        return;
    }
    for (int v = q.back() + 1; v <= n; ++v) {
        if (!((member[static_cast<std::size_t>(v)] >> (q.back() - 1)) & 1u)) continue;
        q.push_back(v);
        extend_chain(member, n, q, k, out);
        q.pop_back();
    }
}

}  // namespace

std::vector<std::vector<RootPair>> chain_subsets(const std::vector<RootPair>& roots, int k) {
    if (k < 0) throw std::invalid_argument("chain_subsets: negative length");
    int n = 0;
    for (const RootPair& r : roots) n = std::max(n, std::max(r.i, r.j));
    std::vector<std::uint32_t> member(static_cast<std::size_t>(n) + 1, 0);
    for (const RootPair& r : roots)
        member[static_cast<std::size_t>(r.i)] |= 1u << (r.j - 1);

    std::vector<std::vector<RootPair>> out;
    if (k == 0) return out;
    for (int q1 = 1; q1 <= n; ++q1) {
        std::vector<int> q{q1};
        extend_chain(member, n, q, k, out);
    }
    return out;
}

std::vector<HessFunction> all_hess(int n, int cap) {
    std::vector<HessFunction> out;
    for_each_hess(n, [&](const HessFunction& h) { out.push_back(h); }, cap);
    return out;
}

std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i)
        c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
    return c;
}

}  // namespace hessmult
