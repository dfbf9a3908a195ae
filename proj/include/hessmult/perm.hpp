#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hessmult/common.hpp"

namespace hessmult {

// The root t_i - t_j of gl(n), stored as the ordered pair (i, j).  Negative
// root iff i > j.  Inversion pairs follow the same convention: the larger
// index is listed first, so inversion sets read directly as negative roots.
struct RootPair {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const RootPair&, const RootPair&) = default;
};

// Subset of the simple roots alpha_1, ..., alpha_{n-1}, index i <-> alpha_i.
class SimpleRootSet {
public:
    SimpleRootSet() = default;
    explicit SimpleRootSet(int n, std::uint32_t mask = 0);
    static SimpleRootSet of(int n, std::initializer_list<int> members);
    static SimpleRootSet full(int n);  // all of Delta

    int n() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int i) const;
    void add(int i);
    SimpleRootSet complement() const;  // Delta minus this
    bool subset_of(const SimpleRootSet& other) const;
    std::vector<int> members() const;
    std::string to_string() const;  // "[4,8,11,14]"

    friend bool operator==(const SimpleRootSet&, const SimpleRootSet&) = default;

private:
    int n_ = 0;
    std::uint32_t mask_ = 0;
};

// A permutation of {1..n} in one-line notation: image[i-1] = w(i).
// n = 0 (the empty permutation) is a legal value.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> image);  // validates that image is a bijection

    static Perm identity(int n);
    static Perm longest(int n);  // [n, n-1, ..., 1]
    static Perm parse(std::string_view text);

    int n() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& image() const { return image_; }

    Perm inverse() const;
    // (w ∘ v)(i) = w(v(i)); right factor acts on positions.
    Perm compose(const Perm& rhs) const;

    std::string to_string() const;  // "[3,6,2,8,5,1,7,4]"

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<int> image_;
};

// inv(w) = {(i, j) | i > j and w(i) < w(j)}, larger index first.
std::vector<RootPair> inversions(const Perm& w);

// Left descents: alpha_i with i+1 appearing before i in one-line notation.
SimpleRootSet left_descents(const Perm& w);
// Right descents: alpha_i with w(i) > w(i+1).
SimpleRootSet right_descents(const Perm& w);

// The unique decomposition of {1..n} into maximal intervals of positions on
// which the one-line notation strictly increases.  Count = |Des_R(w)| + 1.
std::vector<Interval> maximal_staircases(const Perm& w);

// Delete the values 1..m from the one-line notation and relabel j -> j - m,
// giving a permutation of n - m letters.  Accepts 0 <= m <= n.
Perm drop_low_values(const Perm& w, int m);

// Lexicographically smallest one-line notation first; rank in [0, n!).
std::vector<int> perm_at_rank(int n, std::uint64_t rank);

// Visit all of S_n in lexicographic one-line order.  The callback receives
// the one-line notation as a span; it must not retain the pointer.
// n = 0 visits the empty permutation exactly once.
template <typename F>
void for_each_perm(int n, F&& fn) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    do {
        fn(std::span<const int>(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

// Contiguous lexicographic slice of S_n; disjoint ranges partition the group,
// which is what makes the counting kernels splittable.
template <typename F>
void for_each_perm_range(int n, std::uint64_t begin, std::uint64_t end, F&& fn) {
    if (begin >= end) return;
    std::vector<int> img = perm_at_rank(n, begin);
    for (std::uint64_t r = begin; r != end; ++r) {
        fn(std::span<const int>(img));
        std::next_permutation(img.begin(), img.end());
    }
}

}  // namespace hessmult
