#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hessmult/amatrix.hpp"
#include "hessmult/hessenberg.hpp"
#include "hessmult/partition.hpp"
#include "hessmult/solver.hpp"

namespace hessmult {

// The shortest permutation pinning a sink set T = {l_1 < ... < l_k}: it puts
// k-j+1 at position l_j and lists the remaining values k+1..n increasingly.
// Its inversions are exactly the pairs (i, j), i > j, i in T.
Perm canonical_sink_perm(const std::vector<int>& T, int n);

// w = canonical * sigma with sigma fixing every vertex of T; reduced is
// sigma with the T positions deleted and the remaining entries relabelled
// through the deletion map (equivalently: w with the values 1..k dropped).
struct SinkFactorization {
    Perm w;
    std::vector<int> T;
    Perm canonical;  // the pinning permutation above
    Perm sigma;
    Perm reduced;    // element of S_{n-k}
};

// Requires w(l_j) = k-j+1 for all j; throws otherwise.
SinkFactorization factorize_at_sinks(const Perm& w, const std::vector<int>& T);

// Splits inv(w) into the inversions contributed by the sink positions and
// those of sigma supported away from T.  The two parts are disjoint and
// union to inv(w).
struct InversionSplit {
    std::vector<RootPair> from_sinks;   // (i, j) with i in T
    std::vector<RootPair> from_sigma;   // inv(sigma) with both indices off T
};
InversionSplit inversion_split(const Perm& w, const std::vector<int>& T);

// Membership test for the class of lambda at h: each simple root index j is
// required to land in Phi_h when j lies in column_break_roots(lambda) and in
// the ideal otherwise.
bool in_lambda_class(const Perm& w, const Partition& lambda, const HessFunction& h);

// The members of the lambda class at h pinned to T (w(l_j) = k-j+1) with the
// given h-inversion count.  lambda must have |T| parts.
std::vector<Perm> sink_class_members(const Partition& lambda, const HessFunction& h,
                                     const std::vector<int>& T, int degree);

// Per-degree totals of the lambda class at h split by the sink set each
// member pins; fails loudly if some member pins no valid sink set.
struct SinkDecomposition {
    std::vector<std::int64_t> total_by_degree;
    std::vector<std::pair<std::vector<int>, std::vector<std::int64_t>>> by_sink_set;
    bool partitioned = true;  // every member landed in exactly one bucket
};
SinkDecomposition sink_decomposition(const Partition& lambda, const HessFunction& h);

// Compares the pinned class at T against the class of lambda[1] for the
// reduced function on n-k letters, degree-shifted by deg(T), and checks that
// deleting sink entries maps the former injectively into the latter.
// Requires lambda to have exactly ht+1 parts (the regime where the shift is
// a bijection); throws otherwise.
struct SinkReductionCheck {
    std::vector<int> T;
    int deg = 0;
    std::vector<std::int64_t> left;   // by degree of h
    std::vector<std::int64_t> right;  // by degree of the reduced function
    bool counts_match = false;
    bool bijection_verified = false;
    std::string to_json_string() const;
};
SinkReductionCheck sink_reduction_check(const Partition& lambda, const HessFunction& h,
                                        const std::vector<int>& T);

// Shared state for the recursive coefficient computation: system matrices
// per n and solved tables per reduced function.  Thread-safe.
class InductionContext {
public:
    const AMatrix& matrix(int n, int jobs = 1);
    const MultTable& solved(const HessFunction& h, int jobs = 1);

private:
    std::mutex mutex_;
    std::map<int, AMatrix> matrices_;
    std::map<std::string, MultTable> solved_;
};

// One branch of the recursion: a maximal sink set, its degree, the reduced
// function, and the reduced-instance coefficient per degree of h.
struct InductionBranch {
    std::vector<int> T;
    int deg = 0;
    HessFunction reduced;
    std::vector<std::int64_t> term_by_degree;
};

// c(mu, d) for mu with exactly ht+1 parts, computed as the sum over maximal
// sink sets T of the reduced coefficient c(mu[1], d - deg(T)) on n-k
// letters; negative shifted degrees contribute nothing.
struct InductionResult {
    Partition mu;
    std::vector<InductionBranch> branches;
    std::vector<std::int64_t> total_by_degree;
};
InductionResult inductive_coeffs(const HessFunction& h, const Partition& mu,
                                 InductionContext* ctx = nullptr, int jobs = 1);
std::int64_t inductive_coeff(const HessFunction& h, const Partition& mu, int degree,
                             InductionContext* ctx = nullptr, int jobs = 1);

}  // namespace hessmult
