#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hessmult/amatrix.hpp"
#include "hessmult/hessenberg.hpp"
#include "hessmult/sink_induction.hpp"
#include "hessmult/solver.hpp"

namespace hessmult {

// dim of the subspace of the tabloid module M^mu fixed by the Young subgroup
// generated by I: counts the w with Des_L(w) inside the complement of I and
// Des_R(w) inside the complement of row_interior_roots(mu).  Subset sums over
// the descent table.
std::int64_t dim_fixed(const DescentTable& table, const Partition& mu, const SimpleRootSet& I);
// Same number by a direct filter over S_n; the independent route used by the
// Moebius checks and the tests.
std::int64_t dim_fixed_direct(const Partition& mu, const SimpleRootSet& I);

// Degree histogram of #{w : w^{-1}(I) within Phi_h} by direct filter,
// independent of the classification table.
std::vector<std::int64_t> betti_regular_direct(const SimpleRootSet& I, const HessFunction& h);

// Named checks runnable per Hessenberg function.  Each is an exact identity;
// nonnegativity is the one conjectural statement and a violation is flagged
// as a math alert rather than an implementation bug.
enum class Check : unsigned {
    LinearRelations = 1u << 0,   // class counts vs matrix-weighted multiplicities, every J
    MobiusW = 1u << 1,           // alternating Betti sums recover exact class counts
    MobiusD = 1u << 2,           // alternating fixed-dim sums recover descent-class counts
    BrosnanChow = 1u << 3,       // fixed-space dims of the solved module match Betti vectors
    Vanishing = 1u << 4,         // coefficients vanish beyond ht+1 parts
    Nonnegativity = 1u << 5,     // every coefficient >= 0 (math alert on failure)
    SinkDecomposition = 1u << 6, // class counts split over pinned sink sets
    SinkReduction = 1u << 7,     // degree-shifted bijection onto the reduced instance
    InductiveFormula = 1u << 8,  // recursive coefficients match the direct solve
};

struct CheckSet {
    unsigned bits = 0;
    bool has(Check c) const { return bits & static_cast<unsigned>(c); }
    CheckSet& add(Check c) {
        bits |= static_cast<unsigned>(c);
        return *this;
    }
    static CheckSet all();
    // The standard profile: cheap checks always, the sink/induction family up
    // to n = 6, the subset-exponential Moebius family up to n = 5.
    static CheckSet default_for(int n);
    static CheckSet parse(const std::string& csv);  // "vanishing,brosnan-chow,..."
    std::vector<std::string> names() const;
};

struct CheckResult {
    std::string name;
    nlohmann::json params;
    bool pass = true;
    nlohmann::json witness;  // null when passing
};

struct VerificationReport {
    int n = 0;
    std::optional<HessFunction> h;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;
    bool math_alert = false;

    bool passed() const;
    nlohmann::json to_json() const;
};

VerificationReport verify_h(const HessFunction& h, const AMatrix& a, const DescentTable& dt,
                            const CheckSet& checks, InductionContext* ctx = nullptr);

struct ScanSummary {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::vector<nlohmann::json> math_alerts;
    nlohmann::json to_json() const;
};

// Runs verify_h over every Hessenberg function on [n] in lexicographic
// order.  Functions are checked in parallel; reports are emitted in order.
ScanSummary scan(int n, const CheckSet& checks, int jobs,
                 const std::function<void(const VerificationReport&)>& emit, int cap = kDefaultCap);

}  // namespace hessmult
