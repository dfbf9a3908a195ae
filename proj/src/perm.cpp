#include "hessmult/perm.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace hessmult {

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']')
            throw std::invalid_argument(std::string(what) + ": unbalanced brackets in '" +
                                        std::string(text) + "'");
        body.remove_prefix(1);
        body.remove_suffix(1);
    }
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument(std::string(what) + ": bad integer '" +
                                        std::string(tok) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == body.size())
            throw std::invalid_argument(std::string(what) + ": trailing comma");
    }
    return out;
}

std::string format_int_list(std::span<const int> xs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t t = 0; t < xs.size(); ++t) {
        if (t) os << ',';
        os << xs[t];
    }
    os << ']';
    return os.str();
}

}  // namespace

SimpleRootSet::SimpleRootSet(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > 31) throw std::invalid_argument("SimpleRootSet: rank out of range");
    std::uint32_t allowed = n >= 1 ? ((1u << (n - 1)) - 1) : 0;
    if ((mask & ~allowed) != 0)
        throw std::invalid_argument("SimpleRootSet: member outside 1..n-1");
}

SimpleRootSet SimpleRootSet::of(int n, std::initializer_list<int> members) {
    SimpleRootSet s(n);
    for (int i : members) s.add(i);
    return s;
}

SimpleRootSet SimpleRootSet::full(int n) {
    return SimpleRootSet(n, n >= 1 ? ((1u << (n - 1)) - 1) : 0);
}

bool SimpleRootSet::contains(int i) const {
    if (i < 1 || i > n_ - 1) return false;
    return (mask_ >> (i - 1)) & 1u;
}

void SimpleRootSet::add(int i) {
    if (i < 1 || i > n_ - 1)
        throw std::invalid_argument("SimpleRootSet: index " + std::to_string(i) +
                                    " outside 1..n-1");
    mask_ |= 1u << (i - 1);
}

SimpleRootSet SimpleRootSet::complement() const {
    return SimpleRootSet(n_, full(n_).mask() & ~mask_);
}

bool SimpleRootSet::subset_of(const SimpleRootSet& other) const {
    return (mask_ & ~other.mask_) == 0;
}

std::vector<int> SimpleRootSet::members() const {
    std::vector<int> out;
    for (int i = 1; i <= n_ - 1; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string SimpleRootSet::to_string() const {
    auto m = members();
    return format_int_list(m);
}

Perm::Perm(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Perm: not a bijection on {1..n}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    return Perm(std::move(img));
}

Perm Perm::longest(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = n - i;
    return Perm(std::move(img));
}

Perm Perm::parse(std::string_view text) {
    return Perm(parse_int_list(text, "permutation"));
}

Perm Perm::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Perm(std::move(inv));
}

Perm Perm::compose(const Perm& rhs) const {
    if (n() != rhs.n()) throw std::invalid_argument("Perm::compose: size mismatch");
    std::vector<int> img(image_.size());
    for (int i = 1; i <= n(); ++i) img[static_cast<std::size_t>(i) - 1] = (*this)(rhs(i));
    return Perm(std::move(img));
}

std::string Perm::to_string() const { return format_int_list(image_); }

std::vector<RootPair> inversions(const Perm& w) {
    std::vector<RootPair> out;
    const int n = w.n();
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            if (w(i) < w(j)) out.push_back({i, j});
    return out;
}

SimpleRootSet left_descents(const Perm& w) {
    const Perm inv = w.inverse();
    SimpleRootSet s(w.n());
    for (int i = 1; i <= w.n() - 1; ++i)
        if (inv(i) > inv(i + 1)) s.add(i);
    return s;
}

SimpleRootSet right_descents(const Perm& w) {
    SimpleRootSet s(w.n());
    for (int i = 1; i <= w.n() - 1; ++i)
        if (w(i) > w(i + 1)) s.add(i);
    return s;
}

std::vector<Interval> maximal_staircases(const Perm& w) {
    std::vector<Interval> out;
    const int n = w.n();
    int start = 1;
    for (int i = 1; i <= n; ++i) {
        if (i == n || w(i) > w(i + 1)) {
            out.push_back({start, i});
            start = i + 1;
        }
    }
    return out;
}

Perm drop_low_values(const Perm& w, int m) {
    if (m < 0 || m > w.n())
        throw std::invalid_argument("drop_low_values: m outside 0..n");
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(w.n() - m));
    for (int i = 1; i <= w.n(); ++i)
        if (w(i) > m) img.push_back(w(i) - m);
    return Perm(std::move(img));
}

std::vector<int> perm_at_rank(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(n));
    std::uint64_t r = rank;
    for (int left = n; left >= 1; --left) {
        std::uint64_t f = factorial(left - 1);
        std::uint64_t d = r / f;
        r %= f;
        img.push_back(pool[static_cast<std::size_t>(d)]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return img;
}

}  // namespace hessmult
