#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rim/completion.hpp"
#include "rim/io.hpp"

using namespace rim;

namespace {
RimTable tab(std::map<Word, Word> rows) { return make_rim(rows, 2); }
} // namespace

TEST_CASE("classical totalization") {
    RimTable f = tab({{"1", "0"}});
    CHECK(tilde_complete(f).rows == std::map<Word, Word>{{"0", "0"}, {"1", "0"}});
    RimTable g = tab({{"0", "1"}});
    CHECK(tilde_complete(g).rows == std::map<Word, Word>{{"0", "1"}, {"1", "0"}});
    // fixed point on total tables
    RimTable t = tab({{"0", "1"}, {"1", ""}});
    CHECK(tilde_complete(t).rows == t.rows);
    // general (non-uniform) shape pads the complement with image 0
    RimTable h = tab({{"00", "1"}, {"01", ""}});
    CHECK(tilde_complete(h).rows.at("1") == "0");
    CHECK(classify(tilde_complete(h)).total);
}

TEST_CASE("totalization is not a homomorphism") {
    RimTable f = tab({{"1", "0"}});
    RimTable g = tab({{"0", "1"}});
    RimTable lhs = compose(tilde_complete(g), tilde_complete(f));
    CHECK(lhs.rows == std::map<Word, Word>{{"0", "1"}, {"1", "1"}});
    RimTable rhs = tilde_complete(compose(g, f));
    CHECK(rhs.rows == std::map<Word, Word>{{"0", "0"}, {"1", "1"}});
    CHECK_FALSE(equiv_fin(lhs, rhs));
}

TEST_CASE("three-letter completion") {
    RimTable f = tab({{"1", "0"}});
    RimTable c = three_letter_complete(f);
    CHECK(c.k == 3);
    CHECK(c.rows == std::map<Word, Word>{{"0", "2"}, {"1", "0"}, {"2", "2"}});
    CHECK(is_maximal_code(dom_code(c), 3));
    // the original rows survive unchanged
    RimTable d = three_letter_complete(tab({{"00", "1"}, {"01", "0"}}));
    CHECK(d.rows.at("00") == "1");
    CHECK(d.rows.at("01") == "0");
    CHECK(is_maximal_code(dom_code(d), 3));
}

TEST_CASE("sector membership") {
    SectorMembership id = sector_membership(identity_table());
    CHECK(id.in_F0);
    CHECK(id.in_S0);
    RimTable abar0 = tab({{"0", "0"}, {"10", "11"}, {"11", "10"}});
    SectorMembership s = sector_membership(abar0);
    CHECK(s.in_F0);
    CHECK(s.in_S0);
    // stabilizes but does not fix the 0-sector
    RimTable st = tab({{"0", "00"}, {"1", "01"}});
    SectorMembership s2 = sector_membership(st);
    CHECK_FALSE(s2.in_F0);
    CHECK(s2.in_S0);
    CHECK_FALSE(sector_membership(tab({{"0", "1"}, {"1", "0"}})).in_S0);
    CHECK_THROWS_AS(sector_membership(tab({{"0", "0"}})), rim_error);
}

TEST_CASE("sector projection") {
    RimTable abar0 = tab({{"0", "0"}, {"10", "11"}, {"11", "10"}});
    CHECK(equiv_fin(rho_project(abar0), tab({{"0", "1"}, {"1", "0"}})));
    CHECK_THROWS_AS(rho_project(tab({{"0", "1"}, {"1", "0"}})), rim_error);
    // a completion whose 1-sector partially escapes projects to a partial map
    RimTable p = tab({{"0", "0"}, {"10", "11"}, {"11", "00"}});
    CHECK(rho_project(p).rows == std::map<Word, Word>{{"0", "1"}});
}

TEST_CASE("table completion in fixator mode") {
    RimTable a0 = tab({{"0", "1"}, {"1", "0"}});
    RimTable c = nondet_table_complete(a0, CompleteMode::M);
    CHECK(c.rows == std::map<Word, Word>{{"0", "0"}, {"10", "11"}, {"11", "10"}});
    CHECK(sector_membership(c).in_F0);
    CHECK(equiv_fin(rho_project(c), a0));
    // partial argument: the complement falls into the 0-sector
    RimTable g = tab({{"00", "1"}});
    RimTable cg = nondet_table_complete(g, CompleteMode::M);
    CHECK(cg.rows.at("100") == "11");
    CHECK(cg.rows.at("101") == "0");
    CHECK(cg.rows.at("11") == "0");
    CHECK(equiv_fin(rho_project(cg), g));
}

TEST_CASE("table completion in fixed-length mode") {
    RimTable g = tab({{"0", "1"}});
    RimTable c = nondet_table_complete(g, CompleteMode::Plep);
    CHECK(c.rows == std::map<Word, Word>{{"00", "00"}, {"01", "01"}, {"10", "11"}, {"11", "00"}});
    CHECK(sector_membership(c).in_S0);
    CHECK(equiv_fin(rho_project(c), g));
    CHECK(classify(c).tfl);
    CHECK_THROWS_AS(nondet_table_complete(RimTable{}, CompleteMode::Plep), rim_error);
    CHECK_THROWS_AS(nondet_table_complete(tab({{"0", ""}, {"1", "1"}}), CompleteMode::Plep),
                    rim_error);
}

TEST_CASE("completion of a total element has no free choices") {
    RimTable t = tab({{"0", "1"}, {"10", ""}, {"11", "01"}});
    CompletionPolicy alt;
    alt.m_complement = [](const Word&) { return Word("111"); };
    CHECK(nondet_table_complete(t, CompleteMode::M).rows ==
          nondet_table_complete(t, CompleteMode::M, alt).rows);
}

TEST_CASE("circuit completion semantics") {
    Circuit C = circuit_of_word(parse_genword("zeta1 t(1,3) fork"));
    Metrics mc = circuit_metrics(C);
    Circuit Cb = complete_circuit(C);
    Metrics mb = circuit_metrics(Cb);
    CHECK(mb.l_in == mc.l_in + 1);
    CHECK(mb.l_out == mc.l_out + 1);
    Word zeros(mc.l_out + 1, '0');
    for (const auto& x : all_words(mc.l_in)) {
        auto y = eval_circuit(C, x);
        CHECK(eval_circuit(Cb, "1" + x) == (y ? "1" + *y : zeros));
        CHECK(eval_circuit(Cb, "0" + x) == zeros);
    }
}

TEST_CASE("classical circuit wrapper") {
    Circuit C = circuit_of_word(parse_genword("zeta1"));
    Circuit Ct = tilde_circuit(C);
    CHECK(eval_circuit(Ct, "00") == Word("0"));
    CHECK(eval_circuit(Ct, "01") == Word("1"));
    CHECK(eval_circuit(Ct, "10") == Word("0"));
    CHECK(eval_circuit(Ct, "11") == Word("0"));
    // boolean circuits are already total: returned unchanged
    Circuit B = circuit_of_word(parse_genword("and"));
    CHECK(is_isomorphic(tilde_circuit(B), B));
}

TEST_CASE("gate-word completion") {
    for (const char* txt : {"zeta1", "and", "zeta1 not fork", "or t(1,2) zeta1"}) {
        GenWord w = parse_genword(txt);
        GenWord wb = complete_pfl_word(w);
        CHECK(wb.tag == Alphabet::Tfl);
        RimTable eb = eval_word_symbolic(wb).table;
        CHECK(sector_membership(eb).in_S0);
        CHECK(equiv_fin(rho_project(eb), eval_word_symbolic(w).table));
    }
    CHECK_THROWS_AS(complete_pfl_word(parse_genword("a0")), rim_error);
}

TEST_CASE("monoid-word completion") {
    RimTable c = complete_M_generators(parse_genword("a0"));
    CHECK(c.rows == std::map<Word, Word>{{"0", "0"}, {"10", "11"}, {"11", "10"}});
    // completed transpositions act on the 1-sector only
    RimTable ct = complete_M_generators(parse_genword("t(1,2)"));
    CHECK(ct.rows == std::map<Word, Word>{{"0", "0"},
                                          {"100", "100"},
                                          {"101", "110"},
                                          {"110", "101"},
                                          {"111", "111"}});
    CHECK(sector_membership(ct).in_F0);
    CHECK(equiv_fin(rho_project(ct), tau_table(1, 2)));
    for (const char* txt : {"a1", "a8 a0", "a2 t(1,2) a1"}) {
        GenWord w = parse_genword(txt);
        RimTable cw = complete_M_generators(w);
        CHECK(sector_membership(cw).in_F0);
        CHECK(equiv_fin(rho_project(cw), eval_word_symbolic(w).table));
    }
    CHECK_THROWS_AS(complete_M_generators(parse_genword("zeta")), rim_error);
}
