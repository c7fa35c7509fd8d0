#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rim/io.hpp"
#include "rim/unambiguous.hpp"

using namespace rim;

namespace {

std::vector<GenWord> words_of(const std::vector<std::string>& names) {
    std::vector<GenWord> out;
    for (const auto& n : names) out.push_back(make_word({named_sym(n)}));
    return out;
}

} // namespace

TEST_CASE("union expressions") {
    UnionExpr a = UnionExpr::of(parse_genword("a1_0"));
    UnionExpr b = UnionExpr::of(parse_genword("a2_0"));
    RimTable u = eval_union_expr(UnionExpr::unite({a, b}));
    CHECK(u.rows == std::map<Word, Word>{{"00", "00"}, {"11", "11"}});
    RimTable c = eval_union_expr(UnionExpr::concat(UnionExpr::of(parse_genword("a0")), a));
    CHECK(equiv_fin(c, compose(generator_registry().at("a0"), generator_registry().at("a1_0"))));
    CHECK_THROWS_AS(UnionExpr::unite({a}), rim_error);
    ExprMetrics m = expr_metrics(UnionExpr::unite({a, b}));
    CHECK(m.length == 2);
}

TEST_CASE("fragment union identities") {
    const std::map<std::string, std::vector<std::string>> frags = {
        {"a1", {"a1_-1", "a1_0", "a1_1"}},
        {"a2", {"a2_-1", "a2_0", "a2_1"}},
        {"a8", {"a8_0", "a8_1"}}};
    for (const auto& [full, names] : frags) {
        std::vector<UnionExpr> es;
        for (const auto& w : words_of(names)) es.push_back(UnionExpr::of(w));
        CHECK(equiv_fin(eval_union_expr(UnionExpr::unite(es)), generator_registry().at(full)));
        GenWord merged = merge_mixed_delta(words_of(names));
        CHECK(equiv_fin(eval_word_symbolic(merged).table, generator_registry().at(full)));
    }
}

TEST_CASE("same-difference merge") {
    MergeResult r = merge_same_delta(words_of({"a1_0", "a2_0"}));
    RimTable want = make_rim({{"00", "00"}, {"11", "11"}}, 2);
    CHECK(equiv_fin(r.table, want));
    CHECK(equiv_fin(circuit_table(r.circuit), want));
    CHECK(equiv_fin(eval_word_symbolic(r.word).table, want));
    CHECK(r.word.tag == Alphabet::Pfl);
    // overlap and difference mismatches are rejected
    CHECK_THROWS_AS(merge_same_delta(words_of({"a1_0", "a1_0"})), rim_error);
    CHECK_THROWS_AS(merge_same_delta(words_of({"a1_0", "a8_1"})), rim_error);
}

TEST_CASE("mixed-difference merge") {
    // single branch is returned unchanged
    GenWord one = make_word({named_sym("a8_0")});
    CHECK(word_text(merge_mixed_delta({one})) == "a8_0");
    GenWord m = merge_mixed_delta(words_of({"a8_0", "a8_1"}));
    CHECK(m.tag == Alphabet::RM);
    CHECK(equiv_fin(eval_word_symbolic(m).table, generator_registry().at("a8")));
    CHECK_THROWS_AS(merge_mixed_delta(words_of({"a1_0", "a2_0"})), rim_error);
}

TEST_CASE("table decomposition by output length") {
    auto groups = decompose_table_by_output_length(generator_registry().at("a1"));
    CHECK(groups.size() == 3);
    CHECK(groups[0].rows == std::map<Word, Word>{{"01", "1"}});
    CHECK(groups[1].rows == std::map<Word, Word>{{"00", "00"}});
    CHECK(groups[2].rows == std::map<Word, Word>{{"10", "010"}, {"11", "011"}});
    CHECK_THROWS_AS(decompose_table_by_output_length(RimTable{}), rim_error);
}

TEST_CASE("sequential decomposition of a generator") {
    TaggedWordSet s = decompose_word_sequential(parse_genword("a1"));
    CHECK(s.m == 2);
    REQUIRE(s.entries.size() == 3);
    CHECK(s.entries[0].dvalue == -1);
    CHECK(s.entries[1].dvalue == 0);
    CHECK(s.entries[2].dvalue == 1);
    CHECK(equiv_fin(s.entries[0].table, generator_registry().at("a1_-1")));
    CHECK(equiv_fin(s.entries[1].table, generator_registry().at("a1_0")));
    CHECK(equiv_fin(s.entries[2].table, generator_registry().at("a1_1")));
    std::vector<RimTable> pieces;
    for (const auto& e : s.entries) pieces.push_back(e.table);
    CHECK(equiv_fin(unambiguous_union_tables(pieces), generator_registry().at("a1")));
}

TEST_CASE("decomposition drops pieces that vanish") {
    // a4 a0 a3 evaluates to theta: the image 1 of a0 after a3 misses Dom(a4)
    GenWord w = parse_genword("a4 a0 a3");
    CHECK(eval_word_symbolic(w).table.is_theta());
    CHECK(decompose_word_sequential(w).entries.empty());
    CHECK(decompose_word_parallel(w).entries.empty());
}

TEST_CASE("sequential and parallel decompositions agree") {
    for (const char* txt : {"a1", "a2 a1", "a8 t(1,2)", "a0 a8 a1", "t(1,3) a7"}) {
        GenWord w = parse_genword(txt);
        TaggedWordSet s = decompose_word_sequential(w);
        TaggedWordSet p = decompose_word_parallel(w);
        CHECK(s.m == p.m);
        REQUIRE(s.entries.size() == p.entries.size());
        RimTable ew = eval_word_symbolic(w).table;
        std::vector<RimTable> pieces;
        for (size_t i = 0; i < s.entries.size(); ++i) {
            CHECK(s.entries[i].dvalue == p.entries[i].dvalue);
            CHECK(equiv_fin(s.entries[i].table, p.entries[i].table));
            CHECK(delta(s.entries[i].table) == s.entries[i].dvalue);
            CHECK(equiv_fin(eval_word_symbolic(s.entries[i].word).table, s.entries[i].table));
            pieces.push_back(s.entries[i].table);
        }
        if (!pieces.empty()) CHECK(equiv_fin(unambiguous_union_tables(pieces), ew));
        CHECK_THROWS_AS(decompose_word_sequential(parse_genword("zeta1")), rim_error);
    }
}

TEST_CASE("composition of tagged sets") {
    GenWord wu = parse_genword("a1");
    GenWord wv = parse_genword("a8");
    TaggedWordSet U = decompose_word_sequential(wu);
    TaggedWordSet V = decompose_word_sequential(wv);
    TaggedWordSet W = compose_tagged_sets(U, V);
    RimTable direct = compose(eval_word_symbolic(wv).table, eval_word_symbolic(wu).table);
    std::vector<RimTable> pieces;
    for (const auto& e : W.entries) {
        pieces.push_back(e.table);
        CHECK(delta(e.table) == e.dvalue);
        CHECK(equiv_fin(eval_word_symbolic(e.word).table, e.table));
    }
    CHECK(equiv_fin(unambiguous_union_tables(pieces), direct));
    for (size_t i = 1; i < W.entries.size(); ++i)
        CHECK(W.entries[i - 1].dvalue < W.entries[i].dvalue);
}

TEST_CASE("tagged set text format round trip") {
    TaggedWordSet s = decompose_word_sequential(parse_genword("a8"));
    TaggedWordSet t = parse_tagged(format_tagged(s));
    CHECK(t.m == s.m);
    REQUIRE(t.entries.size() == s.entries.size());
    for (size_t i = 0; i < t.entries.size(); ++i) {
        CHECK(t.entries[i].dvalue == s.entries[i].dvalue);
        CHECK(equiv_fin(t.entries[i].table, s.entries[i].table));
    }
    CHECK_THROWS_AS(parse_tagged("delta=0 : a1_0\n"), rim_error); // missing m header
}
