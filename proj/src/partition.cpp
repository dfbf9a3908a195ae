#include "hessmult/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hessmult {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t t = 0; t < parts_.size(); ++t) {
        if (parts_[t] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (t > 0 && parts_[t] > parts_[t - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        total_ += parts_[t];
    }
}

Partition Partition::parse(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']')
            throw std::invalid_argument("partition: unbalanced brackets");
        body.remove_prefix(1);
        body.remove_suffix(1);
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("partition: bad integer '" + std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t t = 0; t < parts_.size(); ++t) {
        if (t) os << ',';
        os << parts_[t];
    }
    os << ']';
    return os.str();
}

Partition dual_partition(const Partition& lambda) {
    std::vector<int> dual;
    for (int s = 1; s <= lambda.first(); ++s) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= s) ++count;
        dual.push_back(count);
    }
    return Partition(std::move(dual));
}

SimpleRootSet row_interior_roots(const Partition& lambda) {
    SimpleRootSet cut(lambda.total());
    int sum = 0;
    for (int t = 1; t < lambda.parts_count(); ++t) {
        sum += lambda.part(t);
        cut.add(sum);
    }
    return cut.complement();
}

SimpleRootSet column_break_roots(const Partition& lambda) {
    return row_interior_roots(dual_partition(lambda)).complement();
}

Partition truncate_columns(const Partition& lambda, int ell) {
    if (ell < 0 || ell > lambda.first())
        throw std::invalid_argument("truncate_columns: ell outside 0..lambda_1");
    std::vector<int> parts;
    for (int p : lambda.parts())
        if (p > ell) parts.push_back(p - ell);
    return Partition(std::move(parts));
}

StepDecomposition step_decomposition(const Partition& lambda) {
    StepDecomposition out;
    const Partition dual = dual_partition(lambda);
    int start = 1;
    for (int s = 1; s <= lambda.first(); ++s) {
        if (s == lambda.first() || dual.part(s + 1) != dual.part(s)) {
            out.steps.push_back({start, s});
            start = s + 1;
        }
    }
    return out;
}

int partition_compare(const Partition& a, const Partition& b) {
    if (a.total() != b.total())
        throw std::invalid_argument("partition_compare: partitions of different totals");
    const auto da = dual_partition(a).parts();
    const auto db = dual_partition(b).parts();
    if (da < db) return -1;
    if (db < da) return 1;
    return 0;
}

bool partition_precedes(const Partition& a, const Partition& b) {
    return partition_compare(a, b) < 0;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int cap) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    require_within_cap(n, cap);
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return partition_precedes(a, b); });
    return out;
}

}  // namespace hessmult
