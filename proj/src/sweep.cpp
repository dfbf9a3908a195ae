#include "hessmult/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hessmult {

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
#ifdef _OPENMP
    return std::max(1, omp_get_max_threads());
#else
    return 1;
#endif
}

namespace {

std::size_t class_mask_count(int n) { return std::size_t{1} << std::max(n - 1, 0); }

// Classify one permutation: bit j-1 of the result is set iff the root
// t_{pos(j)} - t_{pos(j+1)} is positive or a negative root (a, b) with
// a <= h(b).
inline std::uint32_t class_mask(const int* pos, const HessFunction& h) {
    std::uint32_t mask = 0;
    for (int j = 1; j <= h.n() - 1; ++j) {
        int a = pos[j];
        int b = pos[j + 1];
        if (a < b || a <= h(b)) mask |= 1u << (j - 1);
    }
    return mask;
}

void classify_range(const HessFunction& h, std::uint64_t begin, std::uint64_t end,
                    std::vector<std::vector<std::int64_t>>& counts) {
    const int n = h.n();
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for_each_perm_range(n, begin, end, [&](std::span<const int> img) {
        for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(img[static_cast<std::size_t>(i) - 1])] = i;
        std::uint32_t mask = class_mask(pos.data(), h);
        int d = h_inversion_count(img, h);
        ++counts[mask][static_cast<std::size_t>(d)];
    });
}

void descent_range(int n, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::vector<std::int64_t>>& counts) {
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for_each_perm_range(n, begin, end, [&](std::span<const int> img) {
        for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(img[static_cast<std::size_t>(i) - 1])] = i;
        std::uint32_t dl = 0;
        std::uint32_t dr = 0;
        for (int j = 1; j <= n - 1; ++j) {
            if (pos[static_cast<std::size_t>(j)] > pos[static_cast<std::size_t>(j) + 1]) dl |= 1u << (j - 1);
            if (img[static_cast<std::size_t>(j) - 1] > img[static_cast<std::size_t>(j)]) dr |= 1u << (j - 1);
        }
        ++counts[dl][dr];
    });
}

// Iterate all submasks of `allowed` (including 0 and allowed itself).
template <typename F>
void for_each_submask(std::uint32_t allowed, F&& fn) {
    std::uint32_t s = allowed;
    while (true) {
        fn(s);
        if (s == 0) break;
        s = (s - 1) & allowed;
    }
}

}  // namespace

std::int64_t PermClassTable::exact(const SimpleRootSet& J, int d) const {
    if (d < 0 || d > max_degree) return 0;
    return counts[J.mask()][static_cast<std::size_t>(d)];
}

std::vector<std::int64_t> PermClassTable::superset_counts(const SimpleRootSet& J) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
    std::uint32_t free_bits = SimpleRootSet::full(n).mask() & ~J.mask();
    for_each_submask(free_bits, [&](std::uint32_t extra) {
        const auto& row = counts[J.mask() | extra];
        for (std::size_t d = 0; d < out.size(); ++d) out[d] += row[d];
    });
    return out;
}

std::vector<std::int64_t> PermClassTable::betti() const {
    return superset_counts(SimpleRootSet(n));
}

PermClassTable classify_perms_serial(const HessFunction& h) {
    PermClassTable t;
    t.n = h.n();
    for (int i = 1; i <= h.n(); ++i) t.max_degree += h(i) - i;
    t.counts.assign(class_mask_count(t.n),
                    std::vector<std::int64_t>(static_cast<std::size_t>(t.max_degree) + 1, 0));
    classify_range(h, 0, factorial(t.n), t.counts);
    return t;
}

PermClassTable classify_perms_parallel(const HessFunction& h, int jobs) {
    PermClassTable t;
    t.n = h.n();
    for (int i = 1; i <= h.n(); ++i) t.max_degree += h(i) - i;
    t.counts.assign(class_mask_count(t.n),
                    std::vector<std::int64_t>(static_cast<std::size_t>(t.max_degree) + 1, 0));

    const std::uint64_t total = factorial(t.n);
    jobs = std::max(1, jobs);
    const int chunks = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), std::max<std::uint64_t>(total, 1)));
    std::vector<std::vector<std::vector<std::int64_t>>> local(
        static_cast<std::size_t>(chunks), t.counts);

#ifdef _OPENMP
#pragma omp parallel for num_threads(jobs) schedule(static)
#endif
    for (int c = 0; c < chunks; ++c) {
        std::uint64_t lo = total * static_cast<std::uint64_t>(c) / static_cast<std::uint64_t>(chunks);
        std::uint64_t hi = total * (static_cast<std::uint64_t>(c) + 1) / static_cast<std::uint64_t>(chunks);
        classify_range(h, lo, hi, local[static_cast<std::size_t>(c)]);
    }

    for (int c = 0; c < chunks; ++c)
        for (std::size_t m = 0; m < t.counts.size(); ++m)
            for (std::size_t d = 0; d < t.counts[m].size(); ++d)
                t.counts[m][d] += local[static_cast<std::size_t>(c)][m][d];
    return t;
}

PermClassTable classify_perms(const HessFunction& h, int jobs) {
    jobs = resolve_jobs(jobs);
    if (jobs == 1 || factorial(h.n()) < 40320) return classify_perms_serial(h);
    return classify_perms_parallel(h, jobs);
}

std::int64_t DescentTable::left_exact_right_within(const SimpleRootSet& left,
                                                   const SimpleRootSet& right_allowed) const {
    const auto& row = counts[left.mask()];
    std::int64_t total = 0;
    for_each_submask(right_allowed.mask(), [&](std::uint32_t r) { total += row[r]; });
    return total;
}

std::int64_t DescentTable::both_within(const SimpleRootSet& left_allowed,
                                       const SimpleRootSet& right_allowed) const {
    std::int64_t total = 0;
    for_each_submask(left_allowed.mask(), [&](std::uint32_t l) {
        const auto& row = counts[l];
        for_each_submask(right_allowed.mask(), [&](std::uint32_t r) { total += row[r]; });
    });
    return total;
}

DescentTable descent_counts_serial(int n) {
    DescentTable t;
    t.n = n;
    t.counts.assign(class_mask_count(n),
                    std::vector<std::int64_t>(class_mask_count(n), 0));
    descent_range(n, 0, factorial(n), t.counts);
    return t;
}

DescentTable descent_counts_parallel(int n, int jobs) {
    DescentTable t;
    t.n = n;
    t.counts.assign(class_mask_count(n),
                    std::vector<std::int64_t>(class_mask_count(n), 0));

    const std::uint64_t total = factorial(n);
    jobs = std::max(1, jobs);
    const int chunks = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), std::max<std::uint64_t>(total, 1)));
    std::vector<std::vector<std::vector<std::int64_t>>> local(
        static_cast<std::size_t>(chunks), t.counts);

#ifdef _OPENMP
#pragma omp parallel for num_threads(jobs) schedule(static)
#endif
    for (int c = 0; c < chunks; ++c) {
        std::uint64_t lo = total * static_cast<std::uint64_t>(c) / static_cast<std::uint64_t>(chunks);
        std::uint64_t hi = total * (static_cast<std::uint64_t>(c) + 1) / static_cast<std::uint64_t>(chunks);
        descent_range(n, lo, hi, local[static_cast<std::size_t>(c)]);
    }

    for (int c = 0; c < chunks; ++c)
        for (std::size_t l = 0; l < t.counts.size(); ++l)
            for (std::size_t r = 0; r < t.counts[l].size(); ++r)
                t.counts[l][r] += local[static_cast<std::size_t>(c)][l][r];
    return t;
}

DescentTable descent_counts(int n, int jobs) {
    jobs = resolve_jobs(jobs);
    if (jobs == 1 || factorial(n) < 40320) return descent_counts_serial(n);
    return descent_counts_parallel(n, jobs);
}

bool in_root_class(const Perm& w, const SimpleRootSet& J, const HessFunction& h) {
    if (w.n() != h.n() || J.n() != h.n())
        throw std::invalid_argument("in_root_class: size mismatch");
    const Perm pos = w.inverse();
    for (int j = 1; j <= h.n() - 1; ++j) {
        int a = pos(j);
        int b = pos(j + 1);
        bool phi = a < b || a <= h(b);
        if (phi != J.contains(j)) return false;
    }
    return true;
}

std::vector<Perm> class_members(const SimpleRootSet& J, const HessFunction& h, int degree) {
    std::vector<Perm> out;
    for_each_perm(h.n(), [&](std::span<const int> img) {
        if (h_inversion_count(img, h) != degree) return;
        Perm w(std::vector<int>(img.begin(), img.end()));
        if (in_root_class(w, J, h)) out.push_back(std::move(w));
    });
    return out;
}

std::vector<Perm> descent_class_members(const SimpleRootSet& left,
                                        const SimpleRootSet& right_allowed, int n) {
    std::vector<Perm> out;
    for_each_perm(n, [&](std::span<const int> img) {
        Perm w(std::vector<int>(img.begin(), img.end()));
        if (left_descents(w) == left && right_descents(w).subset_of(right_allowed))
            out.push_back(std::move(w));
    });
    return out;
}

}  // namespace hessmult
