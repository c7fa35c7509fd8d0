#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rim/io.hpp"
#include "rim/table.hpp"

using namespace rim;

namespace {
RimTable tab(std::map<Word, Word> rows) { return make_rim(rows, 2); }
} // namespace

TEST_CASE("table construction and application") {
    RimTable f = tab({{"1", "0"}});
    CHECK(rim::apply(f, "1") == Word("0"));
    CHECK(rim::apply(f, "101") == Word("001"));
    CHECK_FALSE(rim::apply(f, "0").has_value());
    CHECK_FALSE(rim::apply(f, "").has_value());
    CHECK(rim::apply(identity_table(), "0110") == Word("0110"));
    CHECK_THROWS_AS(make_rim({{"0", ""}, {"01", "1"}}, 2), rim_error);
    CHECK(RimTable{}.is_theta());
}

TEST_CASE("rational-point application") {
    RimTable f = tab({{"00", "1"}});
    CHECK(apply_rational(f, "0") == Word("1"));   // 0 0^w enters the domain
    CHECK(apply_rational(f, "") == Word("1"));
    CHECK_FALSE(apply_rational(f, "1").has_value());
    CHECK(apply_rational(f, "001") == Word("11"));
    RimTable g = tab({{"0", "10"}});
    CHECK(apply_rational(g, "0") == Word("1")); // trailing zeros stripped
}

TEST_CASE("composition keeps a minimal domain") {
    RimTable f = tab({{"1", "0"}});
    RimTable g = tab({{"0", "1"}});
    CHECK(compose(g, f).rows == std::map<Word, Word>{{"1", "1"}});
    // extension: the identity's image must grow to reach the next domain
    CHECK(compose(tab({{"00", "1"}}), identity_table()).rows ==
          std::map<Word, Word>{{"00", "1"}});
    // vanishing: image leaves the outer domain entirely
    CHECK(compose(tab({{"1", "1"}}), tab({{"0", "0"}})).is_theta());
    CHECK_THROWS_AS(compose(RimTable{3, {}}, identity_table()), rim_error);
}

TEST_CASE("pointwise oracle for composition") {
    RimTable f = tab({{"00", "0"}, {"01", "1"}, {"1", "01"}});
    RimTable g = tab({{"0", "10"}, {"10", "0"}, {"11", "11"}});
    RimTable gf = compose(g, f);
    for (int len = 0; len <= 6; ++len)
        for (const auto& x : all_words(len)) {
            auto fy = rim::apply(f, x);
            std::optional<Word> two = fy ? rim::apply(g, *fy) : std::nullopt;
            CHECK(rim::apply(gf, x) == two);
        }
}

TEST_CASE("refinement and canonical form") {
    RimTable f = tab({{"0", "1"}});
    RimTable r = refine_to_level(f, 2);
    CHECK(r.rows == std::map<Word, Word>{{"00", "10"}, {"01", "11"}});
    CHECK_THROWS_AS(refine_to_level(f, 0), rim_error);
    RimTable c = canonicalize(tab({{"00", "10"}, {"01", "11"}, {"1", "0"}}));
    CHECK(c.rows == std::map<Word, Word>{{"0", "1"}, {"1", "0"}});
    CHECK(canonicalize(identity_table()).rows == identity_table().rows);
}

TEST_CASE("finite-difference equivalence matches the refinement oracle") {
    std::vector<RimTable> cases = {
        identity_table(), tab({{"0", "1"}}), tab({{"00", "10"}, {"01", "11"}}),
        tab({{"0", "1"}, {"1", "0"}}), tab({{"00", "00"}, {"01", "1"}, {"1", "01"}})};
    for (const auto& f : cases)
        for (const auto& g : cases)
            CHECK(equiv_fin(f, g) == equiv_fin_refine(f, g));
}

TEST_CASE("delta sets") {
    CHECK(delta_set(tab({{"00", "00"}, {"01", "1"}, {"1", "01"}})) == std::set<int>{-1, 0, 1});
    CHECK(delta(tab({{"0", "10"}})) == 1);
    CHECK_FALSE(delta(RimTable{}).has_value());
    CHECK_FALSE(delta(tab({{"0", ""}, {"1", "1"}})).has_value());
}

TEST_CASE("classification") {
    Classification id = classify(identity_table());
    CHECK(id.total);
    CHECK(id.injective);
    CHECK(id.surjective);
    CHECK(id.normal);
    CHECK(id.plep);
    CHECK(id.pfl);
    CHECK(id.tfl);
    CHECK(id.idempotent);

    Classification a1 = classify(tab({{"00", "00"}, {"01", "1"}, {"1", "01"}}));
    CHECK(a1.total);
    CHECK(a1.injective);
    CHECK(a1.surjective);
    CHECK_FALSE(a1.plep);
    CHECK_FALSE(a1.pfl);

    Classification half = classify(tab({{"0", "0"}, {"1", "0"}}));
    CHECK(half.total);
    CHECK_FALSE(half.injective);
    CHECK_FALSE(half.surjective);
    CHECK(half.plep);
    CHECK(half.pfl);
    CHECK(half.idempotent);

    Classification part = classify(tab({{"00", "0"}}));
    CHECK_FALSE(part.total);
    CHECK(part.pfl);
    CHECK_FALSE(part.tfl);
}

TEST_CASE("image codes") {
    RimTable f = tab({{"0", "1"}, {"10", "11"}, {"11", "10"}});
    CHECK(image_words(f) == std::vector<Word>{"1", "10", "11"});
    CHECK(image_code(f) == std::vector<Word>{"1"});
    CHECK_FALSE(classify(f).normal);
}

TEST_CASE("regular inverse") {
    for (const auto& f : {tab({{"0", "1"}, {"1", "1"}}), tab({{"00", "1"}, {"01", "0"}}),
                          tab({{"0", "10"}, {"10", "0"}, {"11", "11"}})}) {
        RimTable fp = regular_inverse(f);
        CHECK(equiv_fin(compose(f, compose(fp, f)), f));
    }
    CHECK(regular_inverse(RimTable{}).is_theta());
}

TEST_CASE("injective-normal factorization") {
    for (const auto& f : {tab({{"0", "1"}, {"1", "1"}}), tab({{"0", "11"}, {"1", "110"}}),
                          tab({{"00", "0"}, {"01", "00"}})}) {
        auto [nu, j] = injective_normal_factorization(f);
        CHECK(classify(j).injective);
        CHECK(classify(nu).normal);
        CHECK(equiv_fin(compose(nu, j), f));
    }
}

TEST_CASE("normal chain decomposition") {
    RimTable f = tab({{"00", "0"}, {"01", "0"}, {"1", "0"}});
    auto chain = normal_chain_decomposition(f);
    RimTable acc = identity_table();
    for (const auto& p : chain) {
        CHECK((int)p.rows.size() - (int)image_code(p).size() <= 1);
        acc = compose(acc, p);
    }
    CHECK(equiv_fin(acc, f));
    CHECK(normal_chain_decomposition(tab({{"0", "1"}})).size() == 1);
    CHECK_THROWS_AS(normal_chain_decomposition(tab({{"0", "1"}, {"1", "10"}})), rim_error);
}

TEST_CASE("unambiguous union of tables") {
    RimTable u = unambiguous_union_tables({tab({{"0", "1"}}), tab({{"1", "0"}})});
    CHECK(u.rows == std::map<Word, Word>{{"0", "1"}, {"1", "0"}});
    // overlapping domains keep only the points covered exactly once
    RimTable v = unambiguous_union_tables({tab({{"0", "1"}}), tab({{"01", "00"}})});
    CHECK(v.rows == std::map<Word, Word>{{"00", "10"}});
    CHECK(unambiguous_union_tables({}).is_theta());
}

TEST_CASE("alphabet transport of tables") {
    RimTable f3{3, {{"0", "1"}, {"1", "2"}, {"2", "0"}}};
    std::vector<Word> eta{"00", "01", "1"};
    RimTable f2 = higman_transport(f3, eta);
    CHECK(f2.rows == std::map<Word, Word>{{"00", "01"}, {"01", "1"}, {"1", "00"}});
    CHECK(f2.k == 2);
    CHECK_THROWS_AS(higman_transport(f3, std::vector<Word>{"0", "1"}), rim_error);
}

TEST_CASE("table text format round trip") {
    RimTable f = tab({{"00", ""}, {"01", "1"}, {"1", "01"}});
    RimTable g = parse_table(format_table(f));
    CHECK(g.rows == f.rows);
    CHECK(g.k == 2);
    RimTable f3{3, {{"2", "02"}}};
    CHECK(parse_table(format_table(f3)).k == 3);
    CHECK_THROWS_AS(parse_table("0 1"), rim_error);
    CHECK_THROWS_AS(parse_table("0 -> 1\n0 -> 0"), rim_error);
}
