#include "hessmult/solver.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hessmult {

std::int64_t MultTable::coeff(int mu_idx, int d) const {
    if (d < 0 || d > max_degree) return 0;
    return coeffs[static_cast<std::size_t>(mu_idx)][static_cast<std::size_t>(d)];
}

std::int64_t MultTable::coeff(const Partition& mu, int d) const {
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == mu) return coeff(static_cast<int>(i), d);
    throw std::invalid_argument("MultTable::coeff: partition not in table");
}

std::string MultTable::to_json_string() const {
    nlohmann::json j;
    j["n"] = h.n();
    j["h"] = h.values();
    j["ht"] = height;
    j["betti"] = betti;
    auto& cs = j["coefficients"] = nlohmann::json::array();
    for (std::size_t i = 0; i < order.size(); ++i) {
        nlohmann::json c;
        c["mu"] = order[i].parts();
        c["by_degree"] = coeffs[i];
        cs.push_back(std::move(c));
    }
    j["nonnegative"] = nonnegative;
    return j.dump(2);
}

std::vector<std::int64_t> rhs_vector(const PermClassTable& table,
                                     const std::vector<Partition>& order, int d) {
    std::vector<std::int64_t> w(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        w[i] = table.exact(column_break_roots(order[i]), d);
    return w;
}

MultTable solve(const HessFunction& h, const AMatrix& a, const PermClassTable& table) {
    if (a.n != h.n() || table.n != h.n())
        throw std::invalid_argument("solve: size mismatch between h, matrix, and table");

    MultTable out;
    out.h = h;
    out.max_degree = table.max_degree;
    out.height = ideal_of(h).height;
    out.order = a.order;
    out.betti = table.betti();

    const int m = a.size();
    out.coeffs.assign(static_cast<std::size_t>(m),
                      std::vector<std::int64_t>(static_cast<std::size_t>(out.max_degree) + 1, 0));

    for (int d = 0; d <= out.max_degree; ++d) {
        const std::vector<std::int64_t> w = rhs_vector(table, a.order, d);
        // Back-substitute from the last partition (1,...,1) down to (n).
        for (int li = m - 1; li >= 0; --li) {
            std::int64_t c = w[static_cast<std::size_t>(li)];
            for (int mi = li + 1; mi < m; ++mi)
                c = checked_add(c, -checked_mul(a.at(li, mi),
                                                out.coeffs[static_cast<std::size_t>(mi)]
                                                          [static_cast<std::size_t>(d)]));
            out.coeffs[static_cast<std::size_t>(li)][static_cast<std::size_t>(d)] = c;
            if (c < 0) out.nonnegative = false;
        }
    }
    return out;
}

MultTable solve(const HessFunction& h, const AMatrix& a, int jobs) {
    return solve(h, a, classify_perms(h, jobs));
}

MultTable solve(const HessFunction& h, int jobs) {
    return solve(h, build_a_matrix(h.n(), jobs), classify_perms(h, jobs));
}

std::vector<std::int64_t> betti_regular(const PermClassTable& table, const SimpleRootSet& J) {
    return table.superset_counts(J);
}

std::int64_t tabloid_dim(const Partition& mu) {
    std::int64_t dim = 1;
    int placed = 0;
    // Product of binomials C(placed + mu_t, mu_t) computed incrementally.
    for (int t = 1; t <= mu.parts_count(); ++t) {
        for (int s = 1; s <= mu.part(t); ++s) {
            ++placed;
            dim = checked_mul(dim, placed);
            dim /= s;
        }
    }
    return dim;
}

}  // namespace hessmult
