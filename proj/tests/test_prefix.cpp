#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rim/words.hpp"

using namespace rim;

TEST_CASE("prefix relations") {
    CHECK(is_prefix("", "01"));
    CHECK(is_prefix("01", "01"));
    CHECK_FALSE(is_prefix("011", "01"));
    CHECK(prefix_comparable("0", "01"));
    CHECK(prefix_comparable("01", "0"));
    CHECK_FALSE(prefix_comparable("00", "01"));
}

TEST_CASE("prefix codes and maximality") {
    CHECK(is_prefix_code({"00", "01", "1"}));
    CHECK_FALSE(is_prefix_code({"0", "01"}));
    CHECK_FALSE(is_prefix_code({"0", "0"}));
    CHECK(is_maximal_code({"00", "01", "1"}, 2));
    CHECK_FALSE(is_maximal_code({"00", "1"}, 2));
    CHECK(is_maximal_code({""}, 2));
    CHECK_FALSE(is_maximal_code({}, 2));
    CHECK(is_maximal_code({"0", "1", "2"}, 3));
    CHECK_FALSE(is_maximal_code({"0", "1"}, 3));
}

TEST_CASE("complement code") {
    CHECK(complement_code({"1"}, 2) == std::vector<Word>{"0"});
    CHECK(complement_code({"00", "01", "1"}, 2) == std::vector<Word>{});
    auto q = complement_code({"00"}, 2);
    CHECK(q == std::vector<Word>{"01", "1"});
    // the union is maximal and ideals are disjoint
    std::vector<Word> u{"00"};
    u.insert(u.end(), q.begin(), q.end());
    CHECK(is_prefix_code(u));
    CHECK(is_maximal_code(u, 2));
}

TEST_CASE("strict prefixes and sentinel expansion") {
    auto sp = strict_prefixes({"00", "01", "1"});
    CHECK(sp == std::set<Word>{"", "0"});
    auto e = expand_with_sentinel({"1", "0"});
    CHECK(e == std::vector<Word>{"0", "1", "2"});
    auto e2 = expand_with_sentinel({"00", "01", "1"});
    CHECK(e2 == std::vector<Word>{"00", "01", "02", "1", "2"});
    CHECK(is_maximal_code(e2, 3));
}

TEST_CASE("standard code") {
    auto c = standard_code(2);
    CHECK(c == std::vector<Word>{"0", "1"});
    auto c4 = standard_code(4);
    CHECK(c4.size() == 4);
    CHECK(is_maximal_code(c4, 2));
    CHECK_THROWS_AS(standard_code(1), rim_error);
}

TEST_CASE("restrict and canonical codes") {
    auto r = restrict_code_one_step({"0", "1"}, "0", 2);
    CHECK(r == std::vector<Word>{"00", "01", "1"});
    CHECK(canonical_code({"00", "01", "1"}, 2) == std::vector<Word>{""});
    CHECK(canonical_code({"00", "01", "10"}, 2) == std::vector<Word>{"0", "10"});
    CHECK(codes_equiv_fin({"00", "01"}, {"0"}, 2));
    CHECK_FALSE(codes_equiv_fin({"00"}, {"0"}, 2));
}

TEST_CASE("canonical code agrees with flattening oracle") {
    // two codes are equivalent iff their level-L flattenings coincide
    std::vector<std::vector<Word>> cases = {
        {"0", "1"}, {"00", "01", "1"}, {"0", "10", "11"}, {"00", "1"}, {"010"}};
    for (const auto& P : cases)
        for (const auto& Q : cases) {
            int L = std::max(maxlen(P), maxlen(Q));
            bool oracle = flatten_code(P, 2, L) == flatten_code(Q, 2, L);
            CHECK(codes_equiv_fin(P, Q, 2) == oracle);
        }
}

TEST_CASE("factoring over a maximal code") {
    std::vector<Word> C{"00", "01", "1"};
    auto [fs, rem] = factor_over_maximal_code("0011", C);
    CHECK(fs == std::vector<Word>{"00", "1", "1"});
    CHECK(rem == "");
    auto [fs2, rem2] = factor_over_maximal_code("10", C);
    CHECK(fs2 == std::vector<Word>{"1"});
    CHECK(rem2 == "0");
    CHECK_THROWS_AS(factor_over_maximal_code("0", {"0"}), rim_error);
}

TEST_CASE("alphabet transport encoding") {
    std::vector<Word> eta{"00", "01", "1"};
    CHECK(higman_encode_word("012", eta) == "00011");
    CHECK(higman_encode_word("", eta) == "");
    CHECK_THROWS_AS(higman_encode_word("0", std::vector<Word>{"0", "00"}), rim_error);
}

TEST_CASE("ideal subtraction") {
    auto r = subtract_ideal("0", {"01"}, 2);
    CHECK(r == std::vector<Word>{"00"});
    CHECK(subtract_ideal("01", {"0"}, 2).empty());
    auto full = subtract_ideal("1", {"0"}, 2);
    CHECK(full == std::vector<Word>{"1"});
    auto deep = subtract_ideal("", {"00", "1"}, 2);
    CHECK(deep == std::vector<Word>{"01"});
}

TEST_CASE("word enumeration") {
    CHECK(all_words(0) == std::vector<Word>{""});
    CHECK(all_words(2) == std::vector<Word>{"00", "01", "10", "11"});
    CHECK(all_words(1, 3) == std::vector<Word>{"0", "1", "2"});
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(require_word("2", 2, "test"), rim_error);
    CHECK_THROWS_AS(require_word("0", 1, "test"), rim_error);
    CHECK(valid_word("012", 3));
    CHECK_FALSE(valid_word("013", 3));
}
