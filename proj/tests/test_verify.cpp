#include <doctest.h>

#include "hessmult/verify.hpp"
#include "naive.hpp"

using namespace hessmult;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}  // namespace

TEST_CASE("fixed-space dimensions") {
    // Trivial subgroup: the whole tabloid module.
    for (int n = 1; n <= 5; ++n) {
        const DescentTable dt = descent_counts(n, 1);
        for (const Partition& mu : partitions_of(n)) {
            CHECK(dim_fixed(dt, mu, SimpleRootSet(n)) == tabloid_dim(mu));
            // Full subgroup: one orbit.
            CHECK(dim_fixed(dt, mu, SimpleRootSet::full(n)) == 1);
        }
        // Single row: always one-dimensional.
        for (std::uint32_t im = 0; im < (1u << (n - 1)); ++im)
            CHECK(dim_fixed(dt, P({n}), SimpleRootSet(n, im)) == 1);
    }
}

TEST_CASE("fixed-space dimensions count tabloid orbits") {
    for (int n = 1; n <= 5; ++n) {
        const DescentTable dt = descent_counts(n, 1);
        for (const Partition& mu : partitions_of(n))
            for (std::uint32_t im = 0; im < (1u << (n - 1)); ++im) {
                const SimpleRootSet I(n, im);
                const std::int64_t via_descents = dim_fixed(dt, mu, I);
                CHECK(via_descents == naive::tabloid_orbit_count(mu, I));
                CHECK(via_descents == dim_fixed_direct(mu, I));
            }
    }
}

TEST_CASE("fixed-space dimensions shrink as the subgroup grows") {
    for (int n = 2; n <= 5; ++n) {
        const DescentTable dt = descent_counts(n, 1);
        for (const Partition& mu : partitions_of(n))
            for (std::uint32_t im = 0; im < (1u << (n - 1)); ++im)
                for (int extra = 1; extra <= n - 1; ++extra) {
                    if ((im >> (extra - 1)) & 1) continue;
                    const SimpleRootSet small(n, im);
                    const SimpleRootSet large(n, im | (1u << (extra - 1)));
                    CHECK(dim_fixed(dt, mu, large) <= dim_fixed(dt, mu, small));
                }
    }
}

TEST_CASE("regular Betti vectors by direct filter") {
    const HessFunction h = HessFunction::parse("2,4,4,5,5");
    // No constraint: mass n!.
    const auto b_empty = betti_regular_direct(SimpleRootSet(5), h);
    std::int64_t total = 0;
    for (auto v : b_empty) total += v;
    CHECK(total == 120);

    // Full constraint at complete h: the Mahonian vector.
    CHECK(betti_regular_direct(SimpleRootSet::full(4), HessFunction::complete(4)) ==
          naive::mahonian(4));

    // The direct filter agrees with the table's superset sums.
    for (int n = 1; n <= 5; ++n)
        for_each_hess(n, [&](const HessFunction& hh) {
            const PermClassTable t = classify_perms(hh, 1);
            for (std::uint32_t im = 0; im < (1u << std::max(n - 1, 0)); ++im) {
                const SimpleRootSet I(n, im);
                CHECK(betti_regular(t, I) == betti_regular_direct(I, hh));
            }
        });
}

TEST_CASE("single-function verification passes on the worked instance") {
    const HessFunction h = HessFunction::parse("2,4,4,5,5");
    const AMatrix a = build_a_matrix(5);
    const DescentTable dt = descent_counts(5, 1);
    const VerificationReport r = verify_h(h, a, dt, CheckSet::all());
    CHECK(r.passed());
    CHECK_FALSE(r.math_alert);
    CHECK(r.checks.size() == 9);
    for (const CheckResult& c : r.checks) {
        CHECK(c.pass);
        CHECK(c.witness.is_null());
    }

    const auto j = r.to_json();
    CHECK(j["n"] == 5);
    CHECK(j["h"] == std::vector<int>{2, 4, 4, 5, 5});
    CHECK(j["math_alert"] == false);
}

TEST_CASE("check set parsing and profiles") {
    CHECK(CheckSet::parse("vanishing,brosnan-chow").has(Check::Vanishing));
    CHECK(CheckSet::parse("all").has(Check::MobiusD));
    CHECK_THROWS_AS(CheckSet::parse("nope"), std::invalid_argument);

    const CheckSet five = CheckSet::default_for(5);
    CHECK(five.has(Check::MobiusW));
    CHECK(five.has(Check::SinkReduction));
    const CheckSet six = CheckSet::default_for(6);
    CHECK_FALSE(six.has(Check::MobiusW));
    CHECK(six.has(Check::SinkReduction));
    const CheckSet seven = CheckSet::default_for(7);
    CHECK_FALSE(seven.has(Check::SinkReduction));
    CHECK(seven.has(Check::Vanishing));
    CHECK(seven.has(Check::Nonnegativity));
    CHECK(seven.has(Check::BrosnanChow));
    const CheckSet eight = CheckSet::default_for(8);
    CHECK_FALSE(eight.has(Check::BrosnanChow));
    CHECK(eight.has(Check::Vanishing));
    CHECK(eight.has(Check::Nonnegativity));
}

TEST_CASE("scans cover every function and pass") {
    std::vector<VerificationReport> reports;
    const ScanSummary s3 =
        scan(3, CheckSet::all(), 1, [&](const VerificationReport& r) { reports.push_back(r); });
    CHECK(s3.total == 5);
    CHECK(s3.passed == 5);
    CHECK(s3.failed == 0);
    CHECK(s3.math_alerts.empty());
    CHECK(reports.size() == 5);
    // Reports arrive in lexicographic order of h.
    for (std::size_t i = 0; i + 1 < reports.size(); ++i)
        CHECK(reports[i].h->values() < reports[i + 1].h->values());

    const ScanSummary s1 = scan(1, CheckSet::all(), 1, nullptr);
    CHECK(s1.total == 1);
    CHECK(s1.passed == 1);

    const auto j = s3.to_json();
    CHECK(j["total"] == 5);
    CHECK(j["passed"] == 5);
}

TEST_CASE("every check passes for every function on five letters") {
    const ScanSummary s = scan(5, CheckSet::all(), 1, nullptr);
    CHECK(s.total == 42);
    CHECK(s.passed == 42);
    CHECK(s.failed == 0);
    CHECK(s.math_alerts.empty());
}

TEST_CASE("scan results are schedule independent") {
    std::vector<std::string> serial, parallel;
    scan(4, CheckSet::all(), 1,
         [&](const VerificationReport& r) { serial.push_back(r.to_json()["h"].dump()); });
    scan(4, CheckSet::all(), 3,
         [&](const VerificationReport& r) { parallel.push_back(r.to_json()["h"].dump()); });
    CHECK(serial == parallel);
}
