#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hessmult/amatrix.hpp"
#include "hessmult/hessenberg.hpp"
#include "hessmult/partition.hpp"
#include "hessmult/sweep.hpp"

namespace hessmult {

// Solved multiplicities: coeffs[mu][d] is the coefficient of the tabloid
// module M^mu in cohomology degree 2d, together with the Betti vector
// betti[d] = #{w : |inv_h(w)| = d}.  Solving is exact back-substitution in
// the triangular system; degrees are independent of one another.
struct MultTable {
    HessFunction h;
    int max_degree = 0;  // |Phi_h^-|
    int height = 0;      // ht of the ideal of h
    std::vector<Partition> order;
    std::vector<std::vector<std::int64_t>> coeffs;  // [mu index][degree]
    std::vector<std::int64_t> betti;
    bool nonnegative = true;

    std::int64_t coeff(int mu_idx, int d) const;
    std::int64_t coeff(const Partition& mu, int d) const;
    std::string to_json_string() const;
};

// Right-hand side of the system in one degree: entry per lambda in matrix
// order, counting the permutations classified exactly to
// column_break_roots(lambda) with d many h-inversions.
std::vector<std::int64_t> rhs_vector(const PermClassTable& table,
                                     const std::vector<Partition>& order, int d);

MultTable solve(const HessFunction& h, const AMatrix& a, const PermClassTable& table);
MultTable solve(const HessFunction& h, const AMatrix& a, int jobs = 0);
MultTable solve(const HessFunction& h, int jobs = 0);

// Degree histogram of #{w : w^{-1}(J) lies in Phi_h}; J = {} gives the Betti
// numbers of the regular semisimple variety, J = Delta those of the regular
// nilpotent one.
std::vector<std::int64_t> betti_regular(const PermClassTable& table, const SimpleRootSet& J);

// dim M^mu = n! / (mu_1! ... mu_k!)
std::int64_t tabloid_dim(const Partition& mu);

}  // namespace hessmult
