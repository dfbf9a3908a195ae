#include "hessmult/sink_induction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hessmult {

namespace {

void check_sorted_subset(const std::vector<int>& T, int n, const char* what) {
    if (!std::is_sorted(T.begin(), T.end()))
        throw std::invalid_argument(std::string(what) + ": vertex set must be sorted");
    for (std::size_t a = 0; a + 1 < T.size(); ++a)
        if (T[a] == T[a + 1])
            throw std::invalid_argument(std::string(what) + ": repeated vertex");
    if (!T.empty() && (T.front() < 1 || T.back() > n))
        throw std::invalid_argument(std::string(what) + ": vertex outside [n]");
}

bool pins_sinks(const Perm& w, const std::vector<int>& T) {
    const int k = static_cast<int>(T.size());
    for (int j = 1; j <= k; ++j)
        if (w(T[static_cast<std::size_t>(j) - 1]) != k - j + 1) return false;
    return true;
}

}  // namespace

Perm canonical_sink_perm(const std::vector<int>& T, int n) {
    check_sorted_subset(T, n, "canonical_sink_perm");
    const int k = static_cast<int>(T.size());
    std::vector<int> img(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= k; ++j) img[static_cast<std::size_t>(T[static_cast<std::size_t>(j) - 1]) - 1] = k - j + 1;
    int next = k;
    for (int i = 1; i <= n; ++i)
        if (img[static_cast<std::size_t>(i) - 1] == 0) img[static_cast<std::size_t>(i) - 1] = ++next;
    return Perm(std::move(img));
}

SinkFactorization factorize_at_sinks(const Perm& w, const std::vector<int>& T) {
    check_sorted_subset(T, w.n(), "factorize_at_sinks");
    if (!pins_sinks(w, T))
        throw std::invalid_argument("factorize_at_sinks: w does not pin the sink set");

    SinkFactorization out;
    out.w = w;
    out.T = T;
    out.canonical = canonical_sink_perm(T, w.n());
    out.sigma = out.canonical.inverse().compose(w);

    // Delete the T positions of sigma and relabel the surviving values
    // order-preservingly; sigma permutes [n] minus T among those positions.
    std::vector<int> reduced;
    reduced.reserve(static_cast<std::size_t>(w.n() - static_cast<int>(T.size())));
    for (int i = 1; i <= w.n(); ++i) {
        if (std::find(T.begin(), T.end(), i) != T.end()) continue;
        int v = out.sigma(i);
        int shift = 0;
        for (int t : T)
            if (t <= v) ++shift;
        reduced.push_back(v - shift);
    }
    out.reduced = Perm(std::move(reduced));
    return out;
}

InversionSplit inversion_split(const Perm& w, const std::vector<int>& T) {
    SinkFactorization f = factorize_at_sinks(w, T);
    InversionSplit out;
    for (int i = 2; i <= w.n(); ++i) {
        bool i_in_T = std::find(T.begin(), T.end(), i) != T.end();
        for (int j = 1; j < i; ++j)
            if (i_in_T) out.from_sinks.push_back({i, j});
    }
    for (const RootPair& r : inversions(f.sigma)) {
        bool touches_T = std::find(T.begin(), T.end(), r.i) != T.end() ||
                         std::find(T.begin(), T.end(), r.j) != T.end();
        if (!touches_T) out.from_sigma.push_back(r);
    }
    return out;
}

bool in_lambda_class(const Perm& w, const Partition& lambda, const HessFunction& h) {
    if (lambda.total() != h.n())
        throw std::invalid_argument("in_lambda_class: partition total must equal n");
    return in_root_class(w, column_break_roots(lambda), h);
}

std::vector<Perm> sink_class_members(const Partition& lambda, const HessFunction& h,
                                     const std::vector<int>& T, int degree) {
    if (lambda.parts_count() != static_cast<int>(T.size()))
        throw std::invalid_argument("sink_class_members: |T| must equal the number of parts");
    check_sorted_subset(T, h.n(), "sink_class_members");
    std::vector<Perm> out;
    const SimpleRootSet target = column_break_roots(lambda);
    for_each_perm(h.n(), [&](std::span<const int> img) {
        if (h_inversion_count(img, h) != degree) return;
        Perm w(std::vector<int>(img.begin(), img.end()));
        if (!pins_sinks(w, T)) return;
        if (!in_root_class(w, target, h)) return;
        out.push_back(std::move(w));
    });
    return out;
}

SinkDecomposition sink_decomposition(const Partition& lambda, const HessFunction& h) {
    const int n = h.n();
    const int k = lambda.parts_count();
    const IncompGraph g = incomparability_graph(h);
    const int max_degree = static_cast<int>(hess_negative_roots(h).size());

    SinkDecomposition out;
    out.total_by_degree.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    std::map<std::vector<int>, std::vector<std::int64_t>> buckets;

    const SimpleRootSet target = column_break_roots(lambda);
    for_each_perm(n, [&](std::span<const int> img) {
        Perm w(std::vector<int>(img.begin(), img.end()));
        if (!in_root_class(w, target, h)) return;
        int d = h_inversion_count(img, h);
        out.total_by_degree[static_cast<std::size_t>(d)] += 1;

        // The only sink set a member can pin: the positions of k, k-1, ..., 1.
        const Perm pos = w.inverse();
        std::vector<int> T;
        bool pinned = true;
        for (int v = k; v >= 1; --v) {
            T.push_back(pos(v));
            if (T.size() > 1 && T[T.size() - 2] >= T.back()) pinned = false;
        }
        bool independent = true;
        for (std::size_t a = 0; a < T.size() && independent; ++a)
            for (std::size_t b = a + 1; b < T.size(); ++b)
                if (g.adjacent(T[a], T[b])) {
                    independent = false;
                    break;
                }
        if (!pinned || !independent) {
            out.partitioned = false;
            return;
        }
        auto& row = buckets[T];
        if (row.empty()) row.assign(static_cast<std::size_t>(max_degree) + 1, 0);
        row[static_cast<std::size_t>(d)] += 1;
    });

    for (auto& [T, row] : buckets) out.by_sink_set.emplace_back(T, std::move(row));
    return out;
}

std::string SinkReductionCheck::to_json_string() const {
    nlohmann::json j;
    j["T"] = T;
    j["deg"] = deg;
    j["counts_by_degree_left"] = left;
    j["counts_by_degree_right"] = right;
    j["bijection_verified"] = bijection_verified;
    return j.dump();
}

SinkReductionCheck sink_reduction_check(const Partition& lambda, const HessFunction& h,
                                        const std::vector<int>& T) {
    const int k = lambda.parts_count();
    if (k != static_cast<int>(T.size()))
        throw std::invalid_argument("sink_reduction_check: |T| must equal the number of parts");
    const int height = ideal_of(h).height;
    if (k != height + 1)
        throw std::invalid_argument(
            "sink_reduction_check: requires a partition with exactly ht+1 parts");

    const IncompGraph g = incomparability_graph(h);
    SinkReductionCheck out;
    out.T = T;
    out.deg = sink_degree(g, T);

    const SinkDeletion del = delete_sinks(h, T);
    const Partition reduced_lambda = truncate_columns(lambda, 1);
    const int max_degree = static_cast<int>(hess_negative_roots(h).size());
    const int reduced_max = static_cast<int>(hess_negative_roots(del.reduced).size());

    out.left.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    out.right.assign(static_cast<std::size_t>(reduced_max) + 1, 0);

    // Right side: plain class count on the reduced instance.
    const SimpleRootSet reduced_target = column_break_roots(reduced_lambda);
    for_each_perm(del.reduced.n(), [&](std::span<const int> img) {
        Perm x(std::vector<int>(img.begin(), img.end()));
        if (!in_root_class(x, reduced_target, del.reduced)) return;
        out.right[static_cast<std::size_t>(h_inversion_count(img, del.reduced))] += 1;
    });

    // Left side plus the explicit map: delete sink entries, then check the
    // image lands in the right class at the shifted degree, injectively.
    bool injective = true;
    bool maps_into = true;
    const SimpleRootSet target = column_break_roots(lambda);
    std::set<std::vector<int>> images;
    for_each_perm(h.n(), [&](std::span<const int> img) {
        Perm w(std::vector<int>(img.begin(), img.end()));
        if (!pins_sinks(w, T)) return;
        if (!in_root_class(w, target, h)) return;
        int d = h_inversion_count(img, h);
        out.left[static_cast<std::size_t>(d)] += 1;

        Perm x = factorize_at_sinks(w, T).reduced;
        int shifted = d - out.deg;
        if (shifted < 0 || !in_root_class(x, reduced_target, del.reduced) ||
            h_inversion_count(std::span<const int>(x.image()), del.reduced) != shifted)
            maps_into = false;
        if (!images.insert(x.image()).second) injective = false;
    });

    out.counts_match = true;
    for (int d = 0; d <= max_degree; ++d) {
        int shifted = d - out.deg;
        std::int64_t rhs =
            (shifted >= 0 && shifted <= reduced_max) ? out.right[static_cast<std::size_t>(shifted)] : 0;
        if (out.left[static_cast<std::size_t>(d)] != rhs) out.counts_match = false;
    }
    out.bijection_verified = out.counts_match && injective && maps_into;
    return out;
}

const AMatrix& InductionContext::matrix(int n, int jobs) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = matrices_.find(n);
    if (it == matrices_.end()) it = matrices_.emplace(n, build_a_matrix(n, jobs)).first;
    return it->second;
}

const MultTable& InductionContext::solved(const HessFunction& h, int jobs) {
    const std::string key = std::to_string(h.n()) + ":" + h.to_string();
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = solved_.find(key);
    if (it == solved_.end()) {
        auto mit = matrices_.find(h.n());
        if (mit == matrices_.end())
            mit = matrices_.emplace(h.n(), build_a_matrix(h.n(), jobs)).first;
        it = solved_.emplace(key, solve(h, mit->second, classify_perms(h, jobs))).first;
    }
    return it->second;
}

InductionResult inductive_coeffs(const HessFunction& h, const Partition& mu,
                                 InductionContext* ctx, int jobs) {
    if (mu.total() != h.n())
        throw std::invalid_argument("inductive_coeffs: partition total must equal n");
    const int height = ideal_of(h).height;
    const int k = mu.parts_count();
    if (k != height + 1)
        throw std::invalid_argument(
            "inductive_coeffs: requires a partition with exactly ht+1 parts");

    InductionContext local;
    InductionContext& c = ctx ? *ctx : local;

    const int max_degree = static_cast<int>(hess_negative_roots(h).size());
    const Partition reduced_mu = truncate_columns(mu, 1);

    InductionResult out;
    out.mu = mu;
    out.total_by_degree.assign(static_cast<std::size_t>(max_degree) + 1, 0);

    for (const SinkSet& s : sink_sets(h, k)) {
        InductionBranch branch;
        branch.T = s.vertices;
        branch.deg = s.degree;
        const SinkDeletion del = delete_sinks(h, branch.T);
        branch.reduced = del.reduced;
        const MultTable& small = c.solved(del.reduced, jobs);
        branch.term_by_degree.assign(static_cast<std::size_t>(max_degree) + 1, 0);
        for (int d = 0; d <= max_degree; ++d) {
            int shifted = d - branch.deg;
            if (shifted < 0) continue;
            branch.term_by_degree[static_cast<std::size_t>(d)] = small.coeff(reduced_mu, shifted);
        }
        for (int d = 0; d <= max_degree; ++d)
            out.total_by_degree[static_cast<std::size_t>(d)] = checked_add(
                out.total_by_degree[static_cast<std::size_t>(d)],
                branch.term_by_degree[static_cast<std::size_t>(d)]);
        out.branches.push_back(std::move(branch));
    }
    return out;
}

std::int64_t inductive_coeff(const HessFunction& h, const Partition& mu, int degree,
                             InductionContext* ctx, int jobs) {
    InductionResult r = inductive_coeffs(h, mu, ctx, jobs);
    if (degree < 0 || degree >= static_cast<int>(r.total_by_degree.size())) return 0;
    return r.total_by_degree[static_cast<std::size_t>(degree)];
}

}  // namespace hessmult
