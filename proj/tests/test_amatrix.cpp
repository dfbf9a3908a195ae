#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hessmult/amatrix.hpp"

using namespace hessmult;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("hessmult-test-" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};
}  // namespace

TEST_CASE("small matrices match the known grids") {
    const AMatrix a1 = build_a_matrix(1);
    CHECK(a1.entries == std::vector<std::vector<std::int64_t>>{{1}});

    const AMatrix a2 = build_a_matrix(2);
    CHECK(a2.entries == std::vector<std::vector<std::int64_t>>{{1, 1}, {0, 1}});

    const AMatrix a3 = build_a_matrix(3);
    CHECK(a3.entries ==
          std::vector<std::vector<std::int64_t>>{{1, 1, 1}, {0, 1, 2}, {0, 0, 1}});
    CHECK(a3.order[0] == P({3}));
    CHECK(a3.order[1] == P({2, 1}));
    CHECK(a3.order[2] == P({1, 1, 1}));
}

TEST_CASE("matrices are upper triangular with unit diagonal") {
    for (int n = 1; n <= 6; ++n) {
        const AMatrix a = build_a_matrix(n);
        for (int li = 0; li < a.size(); ++li) {
            CHECK(a.at(li, li) == 1);
            for (int mi = 0; mi < a.size(); ++mi) {
                if (mi < li) CHECK(a.at(li, mi) == 0);
                CHECK(a.at(li, mi) >= 0);
            }
        }
    }
}

TEST_CASE("fast entries agree with enumeration everywhere") {
    for (int n = 1; n <= 6; ++n) {
        const AMatrix a = build_a_matrix(n);
        for (int li = 0; li < a.size(); ++li)
            for (int mi = 0; mi < a.size(); ++mi)
                CHECK(a_entry_fast(a.order[static_cast<std::size_t>(li)],
                                   a.order[static_cast<std::size_t>(mi)]) == a.at(li, mi));
    }

    // Spot checks at n = 7 against the direct filter.
    const auto par7 = partitions_of(7);
    for (std::size_t i = 0; i < par7.size(); i += 3)
        for (std::size_t j = 0; j < par7.size(); j += 4)
            CHECK(a_entry_fast(par7[i], par7[j]) == descent_class_count(par7[i], par7[j]));
}

TEST_CASE("fast entry shortcuts") {
    // Equal single-column pair resolves without enumeration (empty after one strip).
    CHECK(a_entry_fast(P({1, 1, 1, 1, 1, 1, 1, 1}), P({1, 1, 1, 1, 1, 1, 1, 1})) == 1);
    // Fewer parts on the right kills the entry.
    CHECK(a_entry_fast(P({1, 1, 1, 1}), P({4})) == 0);
    CHECK(a_entry_fast(P({2, 2, 1}), P({3, 2})) == 0);
    // Everything above the diagonal stays nonnegative and matches enumeration.
    CHECK(a_entry_fast(P({5}), P({1, 1, 1, 1, 1})) == 1);
    CHECK_THROWS_AS(a_entry_fast(P({2}), P({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("cache round trip") {
    TempDir dir;
    for (int n = 1; n <= 7; ++n) {
        const AMatrix built = a_matrix_cached(n, dir.path);
        CHECK(std::filesystem::exists(dir.path / a_matrix_cache_filename(n)));
        const auto loaded = load_a_matrix(n, dir.path);
        REQUIRE(loaded.has_value());
        CHECK(*loaded == built);
        CHECK(*loaded == build_a_matrix(n));
    }
}

TEST_CASE("corrupt cache entries are rejected and rebuilt") {
    TempDir dir;
    const AMatrix a = a_matrix_cached(4, dir.path);

    // Tamper with one entry; the checksum must catch it.
    const auto file = dir.path / a_matrix_cache_filename(4);
    std::ifstream in(file);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = content.find("\"entries\": [");
    REQUIRE(pos != std::string::npos);
    content.replace(content.find('1', pos), 1, "7");
    std::ofstream(file) << content;

    CHECK_FALSE(load_a_matrix(4, dir.path).has_value());
    const AMatrix rebuilt = a_matrix_cached(4, dir.path);
    CHECK(rebuilt == a);
    CHECK(load_a_matrix(4, dir.path).has_value());

    // recompute bypasses the cache entirely.
    const AMatrix forced = a_matrix_cached(4, dir.path, true);
    CHECK(forced == a);
}
