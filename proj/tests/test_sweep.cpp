#include <doctest.h>

#include <numeric>

#include "hessmult/sweep.hpp"
#include "naive.hpp"

using namespace hessmult;

TEST_CASE("classification buckets partition the whole group") {
    for (int n = 1; n <= 5; ++n) {
        for_each_hess(n, [&](const HessFunction& h) {
            const PermClassTable t = classify_perms_serial(h);
            std::int64_t mass = 0;
            for (const auto& row : t.counts)
                mass += std::accumulate(row.begin(), row.end(), std::int64_t{0});
            CHECK(mass == static_cast<std::int64_t>(factorial(n)));
        });
    }
}

TEST_CASE("classification counts match the direct membership filter") {
    // Two-pass oracle: recount every (J, degree) cell by filtering S_n with
    // fresh membership logic.
    const HessFunction h = HessFunction::parse("2,4,4,5,5");
    const PermClassTable t = classify_perms_serial(h);
    for (std::uint32_t jm = 0; jm < 16; ++jm) {
        const SimpleRootSet J(5, jm);
        for (int d = 0; d <= t.max_degree; ++d)
            CHECK(t.exact(J, d) == naive::class_count(J, h, d));
    }
}

TEST_CASE("extreme Hessenberg functions classify as expected") {
    // Minimal h: every simple-root preimage lands in the ideal unless
    // positive, and no inversions count, so everything sits at degree 0.
    for (int n = 1; n <= 5; ++n) {
        const PermClassTable t = classify_perms_serial(HessFunction::minimal(n));
        CHECK(t.max_degree == 0);
        // The longest element is the unique member of the empty pattern.
        CHECK(t.exact(SimpleRootSet(n), 0) == 1);
        std::int64_t mass = 0;
        for (const auto& row : t.counts) mass += row[0];
        CHECK(mass == static_cast<std::int64_t>(factorial(n)));
    }

    // Complete h: everything classifies to the full pattern, graded by
    // ordinary inversions.
    for (int n = 1; n <= 6; ++n) {
        const PermClassTable t = classify_perms_serial(HessFunction::complete(n));
        const auto mahon = naive::mahonian(n);
        for (int d = 0; d <= t.max_degree; ++d)
            CHECK(t.exact(SimpleRootSet::full(n), d) == mahon[static_cast<std::size_t>(d)]);
        CHECK(t.betti() == mahon);
    }
}

TEST_CASE("parallel classification kernels match the serial reference") {
    for (int n : {2, 5, 6, 7}) {
        std::vector<HessFunction> samples = {HessFunction::minimal(n), HessFunction::complete(n)};
        if (n == 5) samples.push_back(HessFunction::parse("2,4,4,5,5"));
        if (n == 7) samples.push_back(HessFunction::parse("2,3,5,6,7,7,7"));
        for (const HessFunction& h : samples) {
            const PermClassTable serial = classify_perms_serial(h);
            for (int jobs : {1, 2, 3, 5}) {
                const PermClassTable parallel = classify_perms_parallel(h, jobs);
                CHECK(serial.counts == parallel.counts);
                CHECK(serial.max_degree == parallel.max_degree);
            }
        }
    }
}

TEST_CASE("parallel descent kernels match the serial reference") {
    for (int n : {1, 2, 5, 6, 7}) {
        const DescentTable serial = descent_counts_serial(n);
        for (int jobs : {2, 4}) {
            const DescentTable parallel = descent_counts_parallel(n, jobs);
            CHECK(serial.counts == parallel.counts);
        }
    }
}

TEST_CASE("descent table answers exact-left subset-right queries") {
    // Entries of the small matrices, recounted naively.
    const DescentTable t2 = descent_counts_serial(2);
    auto d2 = [&](const SimpleRootSet& J, const SimpleRootSet& K) {
        return t2.left_exact_right_within(J.complement(), K.complement());
    };
    CHECK(d2(SimpleRootSet::of(2, {1}), SimpleRootSet::of(2, {1})) == 1);
    CHECK(d2(SimpleRootSet(2), SimpleRootSet::of(2, {1})) == 0);

    const DescentTable t3 = descent_counts_serial(3);
    CHECK(t3.left_exact_right_within(SimpleRootSet::of(3, {2}).complement(),
                                     SimpleRootSet::full(3)) == 2);

    for (int n = 2; n <= 5; ++n) {
        const DescentTable t = descent_counts_serial(n);
        for (std::uint32_t jm = 0; jm < (1u << (n - 1)); jm += 3) {
            for (std::uint32_t km = 0; km < (1u << (n - 1)); km += 2) {
                const SimpleRootSet left(n, jm);
                const SimpleRootSet right(n, km);
                CHECK(t.left_exact_right_within(left, right) ==
                      naive::descent_class_count(left, right, n));
            }
        }
    }
}

TEST_CASE("class member enumeration matches the table cells") {
    const HessFunction h = HessFunction::parse("2,4,4,5,5");
    const PermClassTable t = classify_perms_serial(h);
    for (std::uint32_t jm = 0; jm < 16; ++jm) {
        const SimpleRootSet J(5, jm);
        for (int d = 0; d <= t.max_degree; ++d) {
            const auto members = class_members(J, h, d);
            CHECK(static_cast<std::int64_t>(members.size()) == t.exact(J, d));
            for (const Perm& w : members) {
                CHECK(in_root_class(w, J, h));
                CHECK(static_cast<int>(h_inversions(w, h).size()) == d);
            }
        }
    }

    // The known worked member sits in its cell.
    const HessFunction h8 = HessFunction::parse("2,3,5,6,7,8,8,8");
    const Perm w = Perm::parse("[3,6,2,8,5,1,7,4]");
    CHECK(in_root_class(w, SimpleRootSet::of(8, {3, 6}), h8));
}

TEST_CASE("descent class member enumeration matches the table") {
    for (int n = 2; n <= 5; ++n) {
        const DescentTable t = descent_counts_serial(n);
        for (std::uint32_t lm = 0; lm < (1u << (n - 1)); lm += 2) {
            for (std::uint32_t rm = 0; rm < (1u << (n - 1)); rm += 3) {
                const SimpleRootSet left(n, lm);
                const SimpleRootSet right(n, rm);
                const auto members = descent_class_members(left, right, n);
                CHECK(static_cast<std::int64_t>(members.size()) ==
                      t.left_exact_right_within(left, right));
            }
        }
    }
}

TEST_CASE("superset counts give the Betti vectors of regular forms") {
    // J = {}: palindromic vector summing to n!.
    for (int n = 1; n <= 6; ++n) {
        for_each_hess(n, [&](const HessFunction& h) {
            const PermClassTable t = classify_perms_serial(h);
            const auto betti = t.superset_counts(SimpleRootSet(n));
            CHECK(std::accumulate(betti.begin(), betti.end(), std::int64_t{0}) ==
                  static_cast<std::int64_t>(factorial(n)));
            for (std::size_t d = 0; d < betti.size(); ++d)
                CHECK(betti[d] == betti[betti.size() - 1 - d]);
        });
    }

    // J = Delta with complete h: the Mahonian distribution again.
    const PermClassTable t = classify_perms_serial(HessFunction::complete(5));
    CHECK(t.superset_counts(SimpleRootSet::full(5)) == naive::mahonian(5));
}
