#include "hessmult/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hessmult {

std::int64_t dim_fixed(const DescentTable& table, const Partition& mu, const SimpleRootSet& I) {
    return table.both_within(I.complement(), row_interior_roots(mu).complement());
}

std::int64_t dim_fixed_direct(const Partition& mu, const SimpleRootSet& I) {
    const int n = mu.total();
    const std::uint32_t left_allowed = I.complement().mask();
    const std::uint32_t right_allowed = row_interior_roots(mu).complement().mask();
    std::int64_t count = 0;
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for_each_perm(n, [&](std::span<const int> img) {
        for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(img[static_cast<std::size_t>(i) - 1])] = i;
        std::uint32_t dl = 0;
        std::uint32_t dr = 0;
        for (int j = 1; j <= n - 1; ++j) {
            if (pos[static_cast<std::size_t>(j)] > pos[static_cast<std::size_t>(j) + 1]) dl |= 1u << (j - 1);
            if (img[static_cast<std::size_t>(j) - 1] > img[static_cast<std::size_t>(j)]) dr |= 1u << (j - 1);
        }
        if ((dl & ~left_allowed) == 0 && (dr & ~right_allowed) == 0) ++count;
    });
    return count;
}

std::vector<std::int64_t> betti_regular_direct(const SimpleRootSet& I, const HessFunction& h) {
    const int n = h.n();
    int max_degree = 0;
    for (int i = 1; i <= n; ++i) max_degree += h(i) - i;
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for_each_perm(n, [&](std::span<const int> img) {
        for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(img[static_cast<std::size_t>(i) - 1])] = i;
        for (int j = 1; j <= n - 1; ++j) {
            if (!I.contains(j)) continue;
            int a = pos[static_cast<std::size_t>(j)];
            int b = pos[static_cast<std::size_t>(j) + 1];
            if (!(a < b || a <= h(b))) return;
        }
        out[static_cast<std::size_t>(h_inversion_count(img, h))] += 1;
    });
    return out;
}

namespace {

const std::vector<std::pair<std::string, Check>>& check_names() {
    static const std::vector<std::pair<std::string, Check>> names = {
        {"linear-relations", Check::LinearRelations},
        {"mobius-w", Check::MobiusW},
        {"mobius-d", Check::MobiusD},
        {"brosnan-chow", Check::BrosnanChow},
        {"vanishing", Check::Vanishing},
        {"nonnegativity", Check::Nonnegativity},
        {"sink-decomposition", Check::SinkDecomposition},
        {"sink-reduction", Check::SinkReduction},
        {"inductive-formula", Check::InductiveFormula},
    };
    return names;
}

template <typename F>
void for_each_superset(std::uint32_t base, std::uint32_t universe, F&& fn) {
    std::uint32_t free_bits = universe & ~base;
    std::uint32_t s = free_bits;
    while (true) {
        fn(base | s);
        if (s == 0) break;
        s = (s - 1) & free_bits;
    }
}

}  // namespace

CheckSet CheckSet::all() {
    CheckSet s;
    for (const auto& [name, c] : check_names()) s.add(c);
    return s;
}

CheckSet CheckSet::default_for(int n) {
    CheckSet s;
    s.add(Check::Vanishing).add(Check::Nonnegativity);
    if (n <= 7) s.add(Check::BrosnanChow);
    if (n <= 6) s.add(Check::SinkDecomposition).add(Check::SinkReduction).add(Check::InductiveFormula);
    if (n <= 5) s.add(Check::LinearRelations).add(Check::MobiusW).add(Check::MobiusD);
    return s;
}

CheckSet CheckSet::parse(const std::string& csv) {
    CheckSet s;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "all") return all();
        bool found = false;
        for (const auto& [name, c] : check_names())
            if (name == tok) {
                s.add(c);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("unknown check '" + tok + "'");
    }
    return s;
}

std::vector<std::string> CheckSet::names() const {
    std::vector<std::string> out;
    for (const auto& [name, c] : check_names())
        if (has(c)) out.push_back(name);
    return out;
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    if (h) j["h"] = h->values();
    auto& cs = j["checks"] = nlohmann::json::array();
    for (const CheckResult& c : checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["params"] = c.params;
        cj["pass"] = c.pass;
        cj["witness"] = c.witness;
        cs.push_back(std::move(cj));
    }
    j["elapsed_ms"] = elapsed_ms;
    j["math_alert"] = math_alert;
    return j;
}

nlohmann::json ScanSummary::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["total"] = total;
    j["passed"] = passed;
    j["failed"] = failed;
    j["math_alerts"] = math_alerts;
    return j;
}

namespace {

// Every failing check carries a concrete witness.
CheckResult check_linear_relations(const HessFunction& h, const PermClassTable& table,
                                   const DescentTable& dt, const MultTable& mult) {
    CheckResult out{"linear-relations", nlohmann::json::object(), true, nullptr};
    const int n = h.n();
    const std::uint32_t universe = SimpleRootSet::full(n).mask();
    for (std::uint32_t jm = 0; jm <= universe; ++jm) {
        const SimpleRootSet J(n, jm);
        std::vector<std::int64_t> weighted(static_cast<std::size_t>(table.max_degree) + 1, 0);
        for (std::size_t mi = 0; mi < mult.order.size(); ++mi) {
            const std::int64_t dcount = dt.left_exact_right_within(
                J.complement(), row_interior_roots(mult.order[mi]).complement());
            if (dcount == 0) continue;
            for (int d = 0; d <= table.max_degree; ++d)
                weighted[static_cast<std::size_t>(d)] = checked_add(
                    weighted[static_cast<std::size_t>(d)],
                    checked_mul(mult.coeffs[mi][static_cast<std::size_t>(d)], dcount));
        }
        for (int d = 0; d <= table.max_degree; ++d) {
            if (table.exact(J, d) != weighted[static_cast<std::size_t>(d)]) {
                out.pass = false;
                out.witness = {{"J", J.members()},
                               {"degree", d},
                               {"class_count", table.exact(J, d)},
                               {"weighted_sum", weighted[static_cast<std::size_t>(d)]}};
                return out;
            }
        }
        if (jm == universe) break;
    }
    return out;
}

CheckResult check_mobius_w(const HessFunction& h, const PermClassTable& table) {
    CheckResult out{"mobius-w", nlohmann::json::object(), true, nullptr};
    const int n = h.n();
    const std::uint32_t universe = SimpleRootSet::full(n).mask();
    // Direct-filter Betti vectors per superset; independent of the table.
    std::map<std::uint32_t, std::vector<std::int64_t>> betti;
    for (std::uint32_t im = 0; im <= universe; ++im) {
        betti[im] = betti_regular_direct(SimpleRootSet(n, im), h);
        if (im == universe) break;
    }
    for (std::uint32_t jm = 0; jm <= universe; ++jm) {
        const SimpleRootSet J(n, jm);
        std::vector<std::int64_t> rhs(static_cast<std::size_t>(table.max_degree) + 1, 0);
        for_each_superset(jm, universe, [&](std::uint32_t im) {
            const int sign = (std::popcount(im) - std::popcount(jm)) % 2 == 0 ? 1 : -1;
            const auto& b = betti[im];
            for (std::size_t d = 0; d < rhs.size(); ++d) rhs[d] += sign * b[d];
        });
        for (int d = 0; d <= table.max_degree; ++d)
            if (table.exact(J, d) != rhs[static_cast<std::size_t>(d)]) {
                out.pass = false;
                out.witness = {{"J", J.members()},
                               {"degree", d},
                               {"class_count", table.exact(J, d)},
                               {"alternating_sum", rhs[static_cast<std::size_t>(d)]}};
                return out;
            }
        if (jm == universe) break;
    }
    return out;
}

CheckResult check_mobius_d(int n, const DescentTable& dt) {
    CheckResult out{"mobius-d", nlohmann::json::object(), true, nullptr};
    const std::uint32_t universe = SimpleRootSet::full(n).mask();
    for (const Partition& mu : partitions_of(n, n)) {
        for (std::uint32_t jm = 0; jm <= universe; ++jm) {
            const SimpleRootSet J(n, jm);
            std::int64_t rhs = 0;
            for_each_superset(jm, universe, [&](std::uint32_t im) {
                const int sign = (std::popcount(im) - std::popcount(jm)) % 2 == 0 ? 1 : -1;
                rhs += sign * dim_fixed_direct(mu, SimpleRootSet(n, im));
            });
            const std::int64_t lhs = dt.left_exact_right_within(
                J.complement(), row_interior_roots(mu).complement());
            if (lhs != rhs) {
                out.pass = false;
                out.witness = {{"J", J.members()},
                               {"mu", mu.parts()},
                               {"descent_class_count", lhs},
                               {"alternating_sum", rhs}};
                return out;
            }
            if (jm == universe) break;
        }
    }
    return out;
}

CheckResult check_brosnan_chow(const HessFunction& h, const PermClassTable& table,
                               const DescentTable& dt, const MultTable& mult) {
    CheckResult out{"brosnan-chow", nlohmann::json::object(), true, nullptr};
    const int n = h.n();
    const std::uint32_t universe = SimpleRootSet::full(n).mask();
    for (std::uint32_t jm = 0; jm <= universe; ++jm) {
        const SimpleRootSet J(n, jm);
        const std::vector<std::int64_t> betti = betti_regular(table, J);
        std::vector<std::int64_t> fixed_dims(mult.order.size());
        for (std::size_t mi = 0; mi < mult.order.size(); ++mi)
            fixed_dims[mi] = dim_fixed(dt, mult.order[mi], J);
        for (int d = 0; d <= table.max_degree; ++d) {
            std::int64_t fixed_sum = 0;
            for (std::size_t mi = 0; mi < mult.order.size(); ++mi)
                fixed_sum = checked_add(
                    fixed_sum, checked_mul(mult.coeffs[mi][static_cast<std::size_t>(d)],
                                           fixed_dims[mi]));
            if (fixed_sum != betti[static_cast<std::size_t>(d)]) {
                out.pass = false;
                out.witness = {{"J", J.members()},
                               {"degree", d},
                               {"fixed_space_sum", fixed_sum},
                               {"betti", betti[static_cast<std::size_t>(d)]}};
                return out;
            }
        }
        if (jm == universe) break;
    }
    return out;
}

CheckResult check_vanishing(const MultTable& mult) {
    CheckResult out{"vanishing", nlohmann::json::object(), true, nullptr};
    for (std::size_t mi = 0; mi < mult.order.size(); ++mi) {
        if (mult.order[mi].parts_count() <= mult.height + 1) continue;
        for (int d = 0; d <= mult.max_degree; ++d)
            if (mult.coeffs[mi][static_cast<std::size_t>(d)] != 0) {
                out.pass = false;
                out.witness = {{"mu", mult.order[mi].parts()},
                               {"degree", d},
                               {"coefficient", mult.coeffs[mi][static_cast<std::size_t>(d)]},
                               {"height", mult.height}};
                return out;
            }
    }
    return out;
}

CheckResult check_nonnegativity(const MultTable& mult) {
    CheckResult out{"nonnegativity", nlohmann::json::object(), true, nullptr};
    for (std::size_t mi = 0; mi < mult.order.size(); ++mi)
        for (int d = 0; d <= mult.max_degree; ++d)
            if (mult.coeffs[mi][static_cast<std::size_t>(d)] < 0) {
                out.pass = false;
                out.witness = {{"mu", mult.order[mi].parts()},
                               {"degree", d},
                               {"coefficient", mult.coeffs[mi][static_cast<std::size_t>(d)]},
                               {"severity", "MATH-ALERT"}};
                return out;
            }
    return out;
}

CheckResult check_sink_decomposition(const HessFunction& h, const PermClassTable& table) {
    CheckResult out{"sink-decomposition", nlohmann::json::object(), true, nullptr};
    for (const Partition& lambda : partitions_of(h.n(), h.n())) {
        if (lambda.empty()) continue;
        const SinkDecomposition dec = sink_decomposition(lambda, h);
        std::vector<std::int64_t> summed(dec.total_by_degree.size(), 0);
        for (const auto& [T, row] : dec.by_sink_set)
            for (std::size_t d = 0; d < row.size(); ++d) summed[d] += row[d];
        bool ok = dec.partitioned;
        for (int d = 0; ok && d <= table.max_degree; ++d) {
            if (dec.total_by_degree[static_cast<std::size_t>(d)] != summed[static_cast<std::size_t>(d)] ||
                dec.total_by_degree[static_cast<std::size_t>(d)] !=
                    table.exact(column_break_roots(lambda), d))
                ok = false;
        }
        if (!ok) {
            out.pass = false;
            out.witness = {{"lambda", lambda.parts()},
                           {"total_by_degree", dec.total_by_degree},
                           {"bucketed_by_degree", summed}};
            return out;
        }
    }
    return out;
}

CheckResult check_sink_reduction(const HessFunction& h, int height) {
    CheckResult out{"sink-reduction", nlohmann::json::object(), true, nullptr};
    const int k = height + 1;
    const auto sinks = sink_sets(h, k);
    for (const Partition& lambda : partitions_of(h.n(), h.n())) {
        if (lambda.parts_count() != k) continue;
        for (const SinkSet& s : sinks) {
            const SinkReductionCheck c = sink_reduction_check(lambda, h, s.vertices);
            if (!c.bijection_verified) {
                out.pass = false;
                out.witness = nlohmann::json::parse(c.to_json_string());
                out.witness["lambda"] = lambda.parts();
                return out;
            }
        }
    }
    return out;
}

CheckResult check_inductive_formula(const HessFunction& h, const MultTable& mult,
                                    InductionContext& ctx) {
    CheckResult out{"inductive-formula", nlohmann::json::object(), true, nullptr};
    const int k = mult.height + 1;
    for (const Partition& mu : partitions_of(h.n(), h.n())) {
        if (mu.parts_count() != k) continue;
        const InductionResult r = inductive_coeffs(h, mu, &ctx);
        for (int d = 0; d <= mult.max_degree; ++d)
            if (r.total_by_degree[static_cast<std::size_t>(d)] != mult.coeff(mu, d)) {
                out.pass = false;
                out.witness = {{"mu", mu.parts()},
                               {"degree", d},
                               {"recursive", r.total_by_degree[static_cast<std::size_t>(d)]},
                               {"direct", mult.coeff(mu, d)}};
                return out;
            }
    }
    return out;
}

}  // namespace

VerificationReport verify_h(const HessFunction& h, const AMatrix& a, const DescentTable& dt,
                            const CheckSet& checks, InductionContext* ctx) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.n = h.n();
    report.h = h;

    const PermClassTable table = classify_perms(h, 1);
    const MultTable mult = solve(h, a, table);
    InductionContext local;
    InductionContext& context = ctx ? *ctx : local;

    if (checks.has(Check::LinearRelations))
        report.checks.push_back(check_linear_relations(h, table, dt, mult));
    if (checks.has(Check::MobiusW)) report.checks.push_back(check_mobius_w(h, table));
    if (checks.has(Check::MobiusD)) report.checks.push_back(check_mobius_d(h.n(), dt));
    if (checks.has(Check::BrosnanChow))
        report.checks.push_back(check_brosnan_chow(h, table, dt, mult));
    if (checks.has(Check::Vanishing)) report.checks.push_back(check_vanishing(mult));
    if (checks.has(Check::Nonnegativity)) {
        CheckResult c = check_nonnegativity(mult);
        if (!c.pass) report.math_alert = true;
        report.checks.push_back(std::move(c));
    }
    if (checks.has(Check::SinkDecomposition))
        report.checks.push_back(check_sink_decomposition(h, table));
    if (checks.has(Check::SinkReduction))
        report.checks.push_back(check_sink_reduction(h, mult.height));
    if (checks.has(Check::InductiveFormula))
        report.checks.push_back(check_inductive_formula(h, mult, context));

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

ScanSummary scan(int n, const CheckSet& checks, int jobs,
                 const std::function<void(const VerificationReport&)>& emit, int cap) {
    require_within_cap(n, cap);
    const AMatrix a = build_a_matrix(n, jobs);
    const DescentTable dt = descent_counts(n, jobs);
    const std::vector<HessFunction> hs = all_hess(n, cap);
    InductionContext ctx;

    ScanSummary summary;
    summary.n = n;
    auto absorb = [&](const VerificationReport& r) {
        if (emit) emit(r);
        ++summary.total;
        if (r.passed())
            ++summary.passed;
        else
            ++summary.failed;
        if (r.math_alert) {
            nlohmann::json alert;
            alert["h"] = r.h->values();
            for (const CheckResult& c : r.checks)
                if (c.name == "nonnegativity" && !c.pass) alert["witness"] = c.witness;
            summary.math_alerts.push_back(std::move(alert));
        }
    };

    jobs = resolve_jobs(jobs);
    if (jobs == 1) {
        // Stream reports as they finish so partial progress survives an
        // interrupted run.
        for (const HessFunction& h : hs) absorb(verify_h(h, a, dt, checks, &ctx));
        return summary;
    }

    std::vector<VerificationReport> reports(hs.size());
#ifdef _OPENMP
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
#endif
    for (std::size_t i = 0; i < hs.size(); ++i)
        reports[i] = verify_h(hs[i], a, dt, checks, &ctx);
    for (const VerificationReport& r : reports) absorb(r);
    return summary;
}

}  // namespace hessmult
