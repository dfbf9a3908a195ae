#include <doctest.h>

#include <algorithm>

#include "hessmult/partition.hpp"
#include "naive.hpp"

using namespace hessmult;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}  // namespace

TEST_CASE("dual partition") {
    CHECK(dual_partition(P({5, 4, 4, 2})) == P({4, 4, 3, 3, 1}));
    CHECK(dual_partition(P({8, 5, 3, 2})) == P({4, 4, 3, 2, 2, 1, 1, 1}));
    CHECK(dual_partition(P({6})) == P({1, 1, 1, 1, 1, 1}));
    CHECK(dual_partition(Partition()) == Partition());
}

TEST_CASE("dual partition is an involution") {
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n, 12))
            CHECK(dual_partition(dual_partition(p)) == p);
}

TEST_CASE("row interior and column break root sets") {
    // (5,4,4,2) of 15: row partial sums 5, 9, 13 are cut out.
    const Partition lam = P({5, 4, 4, 2});
    CHECK(row_interior_roots(lam) ==
          SimpleRootSet::of(15, {5, 9, 13}).complement());
    CHECK(column_break_roots(lam) == SimpleRootSet::of(15, {4, 8, 11, 14}));

    CHECK(column_break_roots(P({3, 3, 2})) == SimpleRootSet::of(8, {3, 6}));

    // Single row: nothing removed from Delta; single column: everything.
    CHECK(row_interior_roots(P({6})) == SimpleRootSet::full(6));
    CHECK(row_interior_roots(P({1, 1, 1, 1})).empty());
    CHECK(column_break_roots(P({6})) == SimpleRootSet::full(6));
    CHECK(column_break_roots(P({1, 1, 1, 1})).empty());
}

TEST_CASE("column truncation") {
    CHECK(truncate_columns(P({6, 4, 2, 1}), 2) == P({4, 2}));
    CHECK(truncate_columns(P({3, 3, 2}), 1) == P({2, 2, 1}));
    CHECK(truncate_columns(P({3, 3, 2}), 0) == P({3, 3, 2}));
    CHECK(truncate_columns(P({2, 2}), 2) == Partition());
    CHECK_THROWS_AS(truncate_columns(P({2, 2}), 3), std::invalid_argument);
}

TEST_CASE("column truncation composes additively") {
    for (int n = 1; n <= 10; ++n)
        for (const Partition& p : partitions_of(n, 10))
            for (int s = 0; s <= p.first(); ++s) {
                const Partition ps = truncate_columns(p, s);
                for (int t = 0; t <= ps.first(); ++t)
                    CHECK(truncate_columns(ps, t) == truncate_columns(p, s + t));
            }
}

TEST_CASE("step decomposition finds maximal equal-column runs") {
    const StepDecomposition steps = step_decomposition(P({8, 5, 3, 2}));
    REQUIRE(steps.count() == 4);
    CHECK(steps.steps[0] == Interval{1, 2});
    CHECK(steps.steps[1] == Interval{3, 3});
    CHECK(steps.steps[2] == Interval{4, 5});
    CHECK(steps.steps[3] == Interval{6, 8});

    CHECK(step_decomposition(P({6})).steps == std::vector<Interval>{{1, 6}});
    CHECK(step_decomposition(P({3, 3, 3})).steps == std::vector<Interval>{{1, 3}});
}

TEST_CASE("the total order compares duals lexicographically") {
    CHECK(partition_precedes(P({3, 3}), P({4, 1, 1})));
    CHECK(partition_compare(P({3, 3}), P({3, 3})) == 0);
    CHECK_THROWS_AS(partition_compare(P({2}), P({1, 1, 1})), std::invalid_argument);

    const auto par3 = partitions_of(3);
    REQUIRE(par3.size() == 3);
    CHECK(par3[0] == P({3}));
    CHECK(par3[1] == P({2, 1}));
    CHECK(par3[2] == P({1, 1, 1}));

    for (int n = 1; n <= 8; ++n) {
        const auto all = partitions_of(n);
        CHECK(all.front() == P({n}));
        CHECK(all.back() == dual_partition(P({n})));
        for (std::size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(partition_precedes(all[i], all[i + 1]));
    }
}

TEST_CASE("the total order refines reversed dominance") {
    for (int n = 1; n <= 8; ++n) {
        const auto all = partitions_of(n);
        for (const Partition& mu : all)
            for (const Partition& lam : all)
                if (naive::dominates(lam, mu) && !(lam == mu))
                    CHECK(partition_precedes(lam, mu));
    }
}

TEST_CASE("partition counts match the partition function") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n <= 9; ++n)
        CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
    CHECK_THROWS_AS(partitions_of(10), CapExceeded);
    CHECK(partitions_of(10, 12).size() == 42);
}

TEST_CASE("partition parsing and validation") {
    CHECK(Partition::parse("[5,4,4,2]") == P({5, 4, 4, 2}));
    CHECK(Partition::parse("3,3,2") == P({3, 3, 2}));
    CHECK(Partition::parse("[]") == Partition());
    CHECK_THROWS_AS(Partition::parse("[2,3]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[2,0]"), std::invalid_argument);
    CHECK(P({4, 2, 1}).to_string() == "[4,2,1]");
    CHECK(Partition().to_string() == "[]");

    // Number of parts equals the first entry of the dual.
    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(p.parts_count() == dual_partition(p).first());
}
