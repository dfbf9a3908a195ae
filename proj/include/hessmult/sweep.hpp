#pragma once

#include <cstdint>
#include <vector>

#include "hessmult/hessenberg.hpp"
#include "hessmult/perm.hpp"

// Exhaustive S_n counting kernels.  Both tables are filled by a single pass
// over the group; the pass splits into disjoint contiguous lexicographic
// ranges with one accumulator per range, merged by integer addition at the
// end, so the parallel results are identical to the serial ones regardless
// of schedule.  The serial variants are the reference implementations and
// stay around for the consistency tests and the benchmark.

namespace hessmult {

// Every w assigns each simple root alpha_j a class: w^{-1}(alpha_j) lies
// either in Phi_h (positive, or negative (i,j) with i <= h(j)) or in the
// ideal.  The bitmask of Phi_h-classified indices, together with the
// h-inversion count, buckets the whole group:
//   counts[mask][d] = #{w : class pattern = mask, |inv_h(w)| = d}.
struct PermClassTable {
    int n = 0;
    int max_degree = 0;  // |Phi_h^-| = sum h(i) - i
    std::vector<std::vector<std::int64_t>> counts;

    // #{w : pattern = J exactly, degree = d}
    std::int64_t exact(const SimpleRootSet& J, int d) const;
    // Degree histogram of #{w : J subset of pattern}; for J = {} this is the
    // Betti vector of the regular semisimple variety, and in general the
    // Betti vector of the regular one attached to J.
    std::vector<std::int64_t> superset_counts(const SimpleRootSet& J) const;
    std::vector<std::int64_t> betti() const;
};

PermClassTable classify_perms_serial(const HessFunction& h);
PermClassTable classify_perms_parallel(const HessFunction& h, int jobs);
PermClassTable classify_perms(const HessFunction& h, int jobs = 0);  // 0 = all cores

// counts[L][R] = #{w : Des_L(w) = L, Des_R(w) = R} as bitmasks.  Depends on
// n only; every descent-class count below is a subset sum over this table.
struct DescentTable {
    int n = 0;
    std::vector<std::vector<std::int64_t>> counts;

    // #{w : Des_L(w) = left exactly, Des_R(w) subset of right_allowed}
    std::int64_t left_exact_right_within(const SimpleRootSet& left,
                                         const SimpleRootSet& right_allowed) const;
    // #{w : Des_L(w) subset of left_allowed, Des_R(w) subset of right_allowed}
    std::int64_t both_within(const SimpleRootSet& left_allowed,
                             const SimpleRootSet& right_allowed) const;
};

DescentTable descent_counts_serial(int n);
DescentTable descent_counts_parallel(int n, int jobs);
DescentTable descent_counts(int n, int jobs = 0);

// Membership test behind the classification table: does every simple-root
// preimage of w land on the side J prescribes?
bool in_root_class(const Perm& w, const SimpleRootSet& J, const HessFunction& h);

// The members behind one table cell, in lexicographic order.  Enumerates the
// group; meant for inspection and small n, not for counting.
std::vector<Perm> class_members(const SimpleRootSet& J, const HessFunction& h, int degree);

// Members of the descent class: Des_L(w) = left exactly and Des_R(w) within
// right_allowed.
std::vector<Perm> descent_class_members(const SimpleRootSet& left,
                                        const SimpleRootSet& right_allowed, int n);

int resolve_jobs(int jobs);

}  // namespace hessmult
