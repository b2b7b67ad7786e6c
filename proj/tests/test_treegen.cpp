#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wsz/gen6.hpp"
#include "wsz/treegen.hpp"

using namespace wsz;

namespace {

std::vector<TreeCode> collect(TreeEnumerator trees) {
    std::vector<TreeCode> out;
    TreeCode code;
    while (trees.next(code)) out.push_back(code);
    return out;
}

}  // namespace

TEST_CASE("rooted tree codes per size match the counting recurrence") {
    auto rooted = oracle::rooted_tree_counts(10);
    for (int m = 1; m <= 10; ++m) {
        auto codes = rooted_tree_codes(m);
        CHECK(static_cast<std::int64_t>(codes.size()) == rooted[m]);
        CHECK(std::is_sorted(codes.begin(), codes.end(), std::greater<>()));
        for (const auto& code : codes) CHECK(static_cast<int>(code.size()) == m);
    }
}

TEST_CASE("free tree counts match the counting formula up to order 25") {
    auto free = oracle::free_tree_counts(25);
    for (int n = 1; n <= 25; ++n)
        CHECK(count_free_trees(n) == static_cast<std::uint64_t>(free[n]));
}

TEST_CASE("enumerator emits the advertised number of distinct canonical codes") {
    auto free = oracle::free_tree_counts(12);
    for (int n = 1; n <= 12; ++n) {
        auto codes = collect(TreeEnumerator(n));
        CHECK(static_cast<std::int64_t>(codes.size()) == free[n]);
        std::set<TreeCode> unique(codes.begin(), codes.end());
        CHECK(unique.size() == codes.size());
        for (const auto& code : codes) {
            CHECK(code.levels[0] == 0);
            for (std::size_t i = 1; i < code.levels.size(); ++i) {
                CHECK(code.levels[i] >= 1);
                CHECK(code.levels[i] <= code.levels[i - 1] + 1);
            }
        }
    }
}

TEST_CASE("two runs emit identical sequences") {
    CHECK(collect(TreeEnumerator(9)) == collect(TreeEnumerator(9)));
}

TEST_CASE("emitted count equals the rank total at mid sizes") {
    for (int n : {13, 14, 15}) {
        TreeEnumerator trees(n);
        TreeCode code;
        std::uint64_t emitted = 0;
        while (trees.next(code)) ++emitted;
        CHECK(emitted == count_free_trees(n));
    }
}

TEST_CASE("small orders by hand") {
    CHECK(collect(TreeEnumerator(1)) == std::vector<TreeCode>{TreeCode{{0}}});
    CHECK(collect(TreeEnumerator(2)) == std::vector<TreeCode>{TreeCode{{0, 1}}});
    CHECK(collect(TreeEnumerator(3)) == std::vector<TreeCode>{TreeCode{{0, 1, 1}}});
    auto n5 = collect(TreeEnumerator(5));
    REQUIRE(n5.size() == 3);  // path, chair, star
    CHECK(std::count(n5.begin(), n5.end(), TreeCode{{0, 1, 2, 1, 2}}) == 1);
    CHECK(std::count(n5.begin(), n5.end(), TreeCode{{0, 1, 2, 1, 1}}) == 1);
    CHECK(std::count(n5.begin(), n5.end(), TreeCode{{0, 1, 1, 1, 1}}) == 1);
    CHECK(collect(TreeEnumerator(7)).size() == 11);
}

TEST_CASE("decode") {
    auto s4 = decode(TreeCode{{0, 1, 1, 1}});
    CHECK(s4.degree(0) == 3);
    CHECK(s4.edge_count() == 3);

    auto p4 = decode(TreeCode{{0, 1, 2, 3}});
    CHECK(p4.has_edge(0, 1));
    CHECK(p4.has_edge(1, 2));
    CHECK(p4.has_edge(2, 3));

    auto bent = decode(TreeCode{{0, 1, 2, 1}});
    CHECK(canonical_form(bent) == canonical_form(p4));

    CHECK_THROWS_AS(decode(TreeCode{{1, 2}}), Error);
    CHECK_THROWS_AS(decode(TreeCode{{0, 2}}), Error);
    CHECK_THROWS_AS(decode(TreeCode{{0, 1, 3}}), Error);
    CHECK_THROWS_AS(decode(TreeCode{{}}), Error);
}

TEST_CASE("canonical code of a decoded stream entry is the entry itself") {
    for (int n = 1; n <= 10; ++n) {
        TreeEnumerator trees(n);
        TreeCode code;
        while (trees.next(code)) CHECK(canonical_tree_code(decode(code)) == code);
    }
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 9; ++n) {
        TreeEnumerator trees(n);
        TreeCode code;
        while (trees.next(code)) {
            Graph t = decode(code);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int trial = 0; trial < 5; ++trial) {
                std::shuffle(perm.begin(), perm.end(), rng);
                CHECK(canonical_tree_code(oracle::relabel(t, perm)) == code);
            }
        }
    }
}

TEST_CASE("codes separate classes exactly as the permutation canonical form does") {
    for (int n = 2; n <= 8; ++n) {
        auto codes = collect(TreeEnumerator(n));
        std::set<CanonicalLabel> labels;
        for (const auto& code : codes) labels.insert(canonical_form(decode(code)));
        CHECK(labels.size() == codes.size());
    }
}

TEST_CASE("every labeled tree maps to exactly one emitted code") {
    for (int n = 2; n <= 8; ++n) {
        auto codes = collect(TreeEnumerator(n));
        std::set<TreeCode> emitted(codes.begin(), codes.end());
        CHECK(oracle::pruefer_tree_classes(n) == emitted);
    }
}

TEST_CASE("partition stream covers the enumeration in contiguous blocks") {
    auto whole = collect(TreeEnumerator(7));
    auto shards = partition_stream(7, 4);
    std::vector<TreeCode> joined;
    for (auto& shard : shards)
        for (auto& code : collect(std::move(shard))) joined.push_back(code);
    CHECK(joined == whole);

    auto single = partition_stream(5, 1);
    CHECK(collect(std::move(single[0])).size() == 3);

    auto wide = partition_stream(10, 16);
    std::vector<TreeCode> joined16;
    for (auto& shard : wide)
        for (auto& code : collect(std::move(shard))) joined16.push_back(code);
    CHECK(joined16 == collect(TreeEnumerator(10)));
    CHECK(joined16.size() == 106);
}

TEST_CASE("rank ranges slice the stream exactly") {
    auto whole = collect(TreeEnumerator(9));
    std::uint64_t total = count_free_trees(9);
    REQUIRE(whole.size() == total);
    for (std::uint64_t first : {std::uint64_t{0}, std::uint64_t{10}, total - 3}) {
        std::uint64_t last = std::min(total, first + 7);
        auto part = collect(TreeEnumerator(9, first, last));
        REQUIRE(part.size() == last - first);
        for (std::uint64_t i = first; i < last; ++i) CHECK(part[i - first] == whole[i]);
    }
}

TEST_CASE("pruefer decoding") {
    std::vector<int> seq{2};
    auto p3 = tree_from_pruefer(3, seq);
    CHECK(p3.degree(2) == 2);

    std::vector<int> star_seq{0, 0};
    auto s4 = tree_from_pruefer(4, star_seq);
    CHECK(s4.degree(0) == 3);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        CHECK(is_tree(random_tree(n, rng())));
    }
}

TEST_CASE("code text round trip") {
    TreeCode code{{0, 1, 2, 1}};
    CHECK(to_string(code) == "0,1,2,1");
    CHECK(tree_code_from_string("0,1,2,1") == code);
    CHECK_THROWS_AS(tree_code_from_string("0,x"), Error);
}
