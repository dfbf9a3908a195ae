#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hessmult/partition.hpp"
#include "hessmult/sweep.hpp"

namespace hessmult {

// The h-independent system matrix over partitions of n in the total order:
// entry(lambda, mu) counts permutations whose left descent set is exactly the
// complement of column_break_roots(lambda) and whose right descents lie in
// the complement of row_interior_roots(mu).  Upper-triangular with a unit
// diagonal; construction verifies both before returning.
struct AMatrix {
    int n = 0;
    std::vector<Partition> order;  // total order, (n) first
    std::vector<std::vector<std::int64_t>> entries;

    int size() const { return static_cast<int>(order.size()); }
    int index_of(const Partition& p) const;  // -1 if absent
    std::int64_t at(int lambda_idx, int mu_idx) const {
        return entries[static_cast<std::size_t>(lambda_idx)][static_cast<std::size_t>(mu_idx)];
    }

    friend bool operator==(const AMatrix&, const AMatrix&) = default;
};

AMatrix build_a_matrix(int n, int jobs = 0);
AMatrix build_a_matrix(const DescentTable& table);

// Single entry with the inductive shortcuts: strip the longest common prefix
// of the dual partitions (the entry is unchanged), answer 0 or 1 when the
// reduced pair decides, and enumerate the reduced group only as a last
// resort.  Agrees with build_a_matrix everywhere.
std::int64_t a_entry_fast(const Partition& lambda, const Partition& mu);

// Direct count by filtering S_n; reference route used by a_entry_fast on
// irreducible pairs and by the tests.
std::int64_t descent_class_count(const Partition& lambda, const Partition& mu);

// Disk cache: "a-matrix-<n>.json" holding n, order, entries and a checksum.
std::string a_matrix_cache_filename(int n);
void save_a_matrix(const AMatrix& a, const std::filesystem::path& dir);
// nullopt if the file is missing, malformed, or fails the checksum.
std::optional<AMatrix> load_a_matrix(int n, const std::filesystem::path& dir);
// Load when possible, otherwise build and persist.  recompute forces a
// rebuild (and rewrites the cache entry).
AMatrix a_matrix_cached(int n, const std::filesystem::path& dir, bool recompute = false,
                        int jobs = 0);

}  // namespace hessmult
