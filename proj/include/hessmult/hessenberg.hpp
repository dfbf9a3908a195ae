#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hessmult/common.hpp"
#include "hessmult/perm.hpp"

namespace hessmult {

// Nondecreasing h : [n] -> [n] with h(i) >= i.  n = 0 is legal internally
// (it arises when a maximal sink set deletes every vertex).
class HessFunction {
public:
    HessFunction() = default;
    explicit HessFunction(std::vector<int> values);  // validates

    static HessFunction parse(std::string_view text);  // "2,4,4,5,5"
    static HessFunction complete(int n);               // (n, n, ..., n)
    static HessFunction minimal(int n);                // (1, 2, ..., n)

    int n() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& values() const { return values_; }

    std::string to_string() const;  // "2,4,4,5,5"

    friend auto operator<=>(const HessFunction&, const HessFunction&) = default;

private:
    std::vector<int> values_;
};

// The negative roots t_i - t_j (i > j) with i <= h(j); these biject with the
// edges of the incomparability graph.  Their complement inside the negative
// roots is the ideal below.
std::vector<RootPair> hess_negative_roots(const HessFunction& h);

// The ideal I = {t_i - t_j | i > j, i > h(j)} together with its lower central
// series I_1 = I, I_j = {a + b | a, b in I_{j-1}} ∩ (negative roots), listing
// only the nonempty terms.  height = number of nonempty terms, 0 when I = {}.
struct IdealSeries {
    std::vector<RootPair> ideal;
    std::vector<std::vector<RootPair>> series;
    int height = 0;
};
IdealSeries ideal_of(const HessFunction& h);

// inv(w) restricted to the roots counted by h: pairs (i, j), i > j,
// w(i) < w(j), i <= h(j).  Its size is the cohomology degree a permutation
// contributes to.
std::vector<RootPair> h_inversions(const Perm& w, const HessFunction& h);
int h_inversion_count(std::span<const int> one_line, const HessFunction& h);

// Vertices [n], edges {i, j} for i < j <= h(i).
struct IncompGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // (i, j) with i < j, sorted
    std::vector<std::uint32_t> adj;          // adj[v] bit (u-1) set iff {u,v} edge

    bool adjacent(int u, int v) const { return (adj[static_cast<std::size_t>(v)] >> (u - 1)) & 1u; }
    std::string to_json_string() const;  // {"edges":[[1,2],...],"n":5}
};
IncompGraph incomparability_graph(const HessFunction& h);

// An independent set of vertices together with its degree: the number of
// edges whose larger endpoint lies in the set.
struct SinkSet {
    std::vector<int> vertices;
    int degree = 0;
    friend bool operator==(const SinkSet&, const SinkSet&) = default;
};

// All independent sets of the given size, lexicographically ordered.
std::vector<SinkSet> sink_sets(const IncompGraph& g, int k);
std::vector<SinkSet> sink_sets(const HessFunction& h, int k);
int max_sink_size(const IncompGraph& g);
int max_sink_size(const HessFunction& h);

// deg(T) = #{edges {a,b}, a < b, b in T}.  Throws if T is not independent.
int sink_degree(const IncompGraph& g, const std::vector<int>& T);

// Delete an independent set T of vertices, relabel the survivors
// order-preservingly, and read the Hessenberg function back off the deleted
// graph.  relabel(j) = j - #{t in T : t <= j} for surviving j; 0 on T.
struct SinkDeletion {
    HessFunction reduced;
    std::vector<int> relabel_table;  // index j, 1-based; 0 for deleted vertices
    int relabel(int j) const { return relabel_table[static_cast<std::size_t>(j)]; }
};
SinkDeletion delete_sinks(const HessFunction& h, const std::vector<int>& T);

// The chain of consecutive differences t_{l_{i+1}} - t_{l_i} attached to a
// sorted vertex set T = {l_1 < ... < l_k}; empty for singletons.
std::vector<RootPair> sink_chain_roots(const std::vector<int>& T);

// All chains t_{q_2}-t_{q_1}, ..., t_{q_{k+1}}-t_{q_k} of length k lying
// inside the given root set.  The maximal chain length equals the ideal
// height, which gives an independent route to it.
std::vector<std::vector<RootPair>> chain_subsets(const std::vector<RootPair>& roots, int k);

// All Hessenberg functions on [n] in lexicographic order of value sequences;
// there are Catalan(n) of them.
template <typename F>
void for_each_hess_impl(std::vector<int>& values, int i, int n, F& fn) {
    if (i > n) {
        fn(HessFunction(values));
        return;
    }
    int lo = i == 1 ? 1 : std::max(i, values[static_cast<std::size_t>(i) - 2]);
    for (int v = lo; v <= n; ++v) {
        values[static_cast<std::size_t>(i) - 1] = v;
        for_each_hess_impl(values, i + 1, n, fn);
    }
}

template <typename F>
void for_each_hess(int n, F&& fn, int cap = kDefaultCap) {
    require_within_cap(n, cap);
    if (n == 0) {
        fn(HessFunction());
        return;
    }
    std::vector<int> values(static_cast<std::size_t>(n));
    for_each_hess_impl(values, 1, n, fn);
}

std::vector<HessFunction> all_hess(int n, int cap = kDefaultCap);
std::uint64_t catalan(int n);

}  // namespace hessmult
