#include "hessmult/amatrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hessmult {

int AMatrix::index_of(const Partition& p) const {
    for (int i = 0; i < size(); ++i)
        if (order[static_cast<std::size_t>(i)] == p) return i;
    return -1;
}

AMatrix build_a_matrix(const DescentTable& table) {
    AMatrix a;
    a.n = table.n;
    a.order = partitions_of(a.n, a.n);  // caller already chose n; no extra cap here
    const int m = a.size();
    a.entries.assign(static_cast<std::size_t>(m),
                     std::vector<std::int64_t>(static_cast<std::size_t>(m), 0));
    for (int li = 0; li < m; ++li) {
        const SimpleRootSet left = column_break_roots(a.order[static_cast<std::size_t>(li)]).complement();
        for (int mi = 0; mi < m; ++mi) {
            const SimpleRootSet right =
                row_interior_roots(a.order[static_cast<std::size_t>(mi)]).complement();
            a.entries[static_cast<std::size_t>(li)][static_cast<std::size_t>(mi)] =
                table.left_exact_right_within(left, right);
        }
    }
    // The order was chosen to make this triangular; anything else is a bug.
    for (int li = 0; li < m; ++li) {
        if (a.at(li, li) != 1)
            throw std::logic_error("A matrix: diagonal entry != 1 at index " +
                                   std::to_string(li));
        for (int mi = 0; mi < li; ++mi)
            if (a.at(li, mi) != 0)
                throw std::logic_error("A matrix: nonzero below the diagonal at (" +
                                       std::to_string(li) + "," + std::to_string(mi) + ")");
    }
    return a;
}

AMatrix build_a_matrix(int n, int jobs) {
    return build_a_matrix(descent_counts(n, jobs));
}

std::int64_t descent_class_count(const Partition& lambda, const Partition& mu) {
    if (lambda.total() != mu.total())
        throw std::invalid_argument("descent_class_count: totals differ");
    const int n = lambda.total();
    const SimpleRootSet left_target = column_break_roots(lambda).complement();
    const SimpleRootSet right_allowed = row_interior_roots(mu).complement();
    std::int64_t count = 0;
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for_each_perm(n, [&](std::span<const int> img) {
        for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(img[static_cast<std::size_t>(i) - 1])] = i;
        std::uint32_t dl = 0;
        std::uint32_t dr = 0;
        for (int j = 1; j <= n - 1; ++j) {
            if (pos[static_cast<std::size_t>(j)] > pos[static_cast<std::size_t>(j) + 1]) dl |= 1u << (j - 1);
            if (img[static_cast<std::size_t>(j) - 1] > img[static_cast<std::size_t>(j)]) dr |= 1u << (j - 1);
        }
        if (dl == left_target.mask() && (dr & ~right_allowed.mask()) == 0) ++count;
    });
    return count;
}

std::int64_t a_entry_fast(const Partition& lambda, const Partition& mu) {
    if (lambda.total() != mu.total())
        throw std::invalid_argument("a_entry_fast: totals differ");
    Partition lam = lambda;
    Partition m = mu;
    while (true) {
        if (lam.empty() && m.empty()) return 1;
        const auto dl = dual_partition(lam).parts();
        const auto dm = dual_partition(m).parts();
        std::size_t common = 0;
        while (common < dl.size() && common < dm.size() && dl[common] == dm[common]) ++common;
        if (common > 0) {
            lam = truncate_columns(lam, static_cast<int>(common));
            m = truncate_columns(m, static_cast<int>(common));
            continue;
        }
        // First columns now differ: fewer parts on the mu side kills the
        // count; more parts means the pair sits above the diagonal and only
        // enumeration of the reduced group answers it.
        if (m.parts_count() < lam.parts_count()) return 0;
        return descent_class_count(lam, m);
    }
}

namespace {

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string checksum_payload(const AMatrix& a) {
    std::ostringstream os;
    os << a.n << '#';
    for (const Partition& p : a.order) os << p.to_string() << ';';
    os << '#';
    for (const auto& row : a.entries) {
        for (std::int64_t v : row) os << v << ',';
        os << ';';
    }
    return os.str();
}

std::string checksum_hex(const AMatrix& a) {
    std::ostringstream os;
    os << std::hex << fnv1a(checksum_payload(a));
    return os.str();
}

}  // namespace

std::string a_matrix_cache_filename(int n) {
    return "a-matrix-" + std::to_string(n) + ".json";
}

void save_a_matrix(const AMatrix& a, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    nlohmann::json j;
    j["n"] = a.n;
    auto& order = j["order"] = nlohmann::json::array();
    for (const Partition& p : a.order) order.push_back(p.parts());
    j["entries"] = a.entries;
    j["checksum"] = checksum_hex(a);
    std::ofstream out(dir / a_matrix_cache_filename(a.n));
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed to write A-matrix cache in " + dir.string());
}

std::optional<AMatrix> load_a_matrix(int n, const std::filesystem::path& dir) {
    std::ifstream in(dir / a_matrix_cache_filename(n));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        AMatrix a;
        a.n = j.at("n").get<int>();
        if (a.n != n) return std::nullopt;
        for (const auto& parts : j.at("order"))
            a.order.push_back(Partition(parts.get<std::vector<int>>()));
        a.entries = j.at("entries").get<std::vector<std::vector<std::int64_t>>>();
        if (j.at("checksum").get<std::string>() != checksum_hex(a)) return std::nullopt;
        return a;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

AMatrix a_matrix_cached(int n, const std::filesystem::path& dir, bool recompute, int jobs) {
    if (!recompute) {
        if (auto cached = load_a_matrix(n, dir)) return *cached;
    }
    AMatrix a = build_a_matrix(n, jobs);
    save_a_matrix(a, dir);
    return a;
}

}  // namespace hessmult
