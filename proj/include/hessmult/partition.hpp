#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hessmult/common.hpp"
#include "hessmult/perm.hpp"

namespace hessmult {

// Weakly decreasing sequence of positive parts.  The empty partition (of 0)
// is a legal value: column truncation bottoms out there.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates

    static Partition parse(std::string_view text);  // "[5,4,4,2]" or "5,4,4,2"

    int total() const { return total_; }
    int parts_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int t) const { return parts_[static_cast<std::size_t>(t) - 1]; }  // 1-based
    int first() const { return parts_.empty() ? 0 : parts_.front(); }
    // Bottom length r(lambda): the last (smallest) part, 0 for the empty partition.
    int bottom() const { return parts_.empty() ? 0 : parts_.back(); }
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;  // "[5,4,4,2]"

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

// Transpose of the Young diagram: dual_s = #{t | lambda_t >= s}.  Involutive.
Partition dual_partition(const Partition& lambda);

// Simple roots interior to the rows: Delta minus the row partial sums
// lambda_1, lambda_1+lambda_2, ....  (The set usually written J_lambda.)
SimpleRootSet row_interior_roots(const Partition& lambda);

// Simple roots at the column partial sums, i.e. the row partial sums of the
// dual diagram.  Complement of row_interior_roots(dual).
SimpleRootSet column_break_roots(const Partition& lambda);

// Remove the leftmost ell columns: parts become max(lambda_t - ell, 0) with
// zeros dropped.  Requires 0 <= ell <= lambda_1.
Partition truncate_columns(const Partition& lambda, int ell);

// Maximal runs of columns with equal length, listed left to right; they
// partition {1..lambda_1}.
struct StepDecomposition {
    std::vector<Interval> steps;
    int count() const { return static_cast<int>(steps.size()); }
};
StepDecomposition step_decomposition(const Partition& lambda);

// The total order on partitions of a common n: mu precedes lambda iff
// dual(mu) <_lex dual(lambda).  Refines the reversed dominance order.
// Returns <0, 0, >0; throws if the totals differ.
int partition_compare(const Partition& a, const Partition& b);
bool partition_precedes(const Partition& a, const Partition& b);  // strict

// All partitions of n sorted into the total order above, smallest first
// (so (n) leads and (1,...,1) is last).
std::vector<Partition> partitions_of(int n, int cap = kDefaultCap);

}  // namespace hessmult
