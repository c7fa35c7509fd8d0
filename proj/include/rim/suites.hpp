#pragma once
// Named property suites shared by the CLI `check` command, the unit tests and
// the acceptance gate.  Each suite runs a seeded sample and reports the first
// failing witness, if any.

#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "rim/analysis.hpp"
#include "rim/completion.hpp"
#include "rim/convert.hpp"
#include "rim/io.hpp"
#include "rim/random_gen.hpp"
#include "rim/unambiguous.hpp"

namespace rim {

struct SuiteReport {
    std::string name;
    int samples = 0;
    bool pass = true;
    std::string witness;

    void fail(const std::string& w) {
        if (pass) witness = w;
        pass = false;
    }
};

using SuiteFn = std::function<SuiteReport(uint64_t seed, int samples)>;

namespace suites {

// ---- helpers --------------------------------------------------------------

inline Circuit sample_circuit(Rng& rng, int max_vertices, bool allow_zeta1, int max_l_in) {
    for (;;) {
        Circuit C = random_circuit(rng, max_vertices, allow_zeta1);
        if (circuit_metrics(C).l_in <= max_l_in) return C;
    }
}

// Sample a monoid word whose evaluation (and every intermediate stage of it)
// stays at desk scale.
inline GenWord sample_monoid_word(Rng& rng, int max_len, int max_rows, int max_maxlen) {
    for (;;) {
        GenWord w = random_monoid_word(rng, rng.between(1, max_len));
        RimTable t = identity_table(2);
        bool ok = true;
        for (auto it = w.syms.rbegin(); it != w.syms.rend() && ok; ++it) {
            t = compose(sym_table(*it), t);
            if ((int)t.rows.size() > max_rows || maxlen_dom(t) > max_maxlen) ok = false;
        }
        if (ok) return w;
    }
}

// ---- suites ---------------------------------------------------------------

inline SuiteReport codec(uint64_t seed, int n) {
    SuiteReport r{"codec", n};
    Rng rng(seed);
    for (int i = 0; i < n && r.pass; ++i) {
        Circuit C = random_circuit(rng, 40, i % 2 == 0);
        Word bits = encode_precedence(C);
        try {
            Circuit D = decode_precedence(bits);
            if (!is_isomorphic(C, D)) r.fail("decode not isomorphic:\n" + format_netlist(C));
        } catch (const rim_error& e) {
            r.fail(std::string("decode rejected own encoding: ") + e.what());
        }
    }
    return r;
}

inline SuiteReport compiler(uint64_t seed, int n) {
    SuiteReport r{"compiler", n};
    Rng rng(seed);
    for (int i = 0; i < n && r.pass; ++i) {
        Circuit C = sample_circuit(rng, 60, i % 2 == 0, 12);
        GenWord w = word_of_circuit(C);
        int m = circuit_metrics(C).l_in;
        for (const auto& x : all_words(m)) {
            auto yc = eval_circuit(C, x);
            EvalResult yw = eval_word_on_input(w, x);
            bool wd = yw.status == EvalStatus::Defined;
            if (yc.has_value() != wd || (wd && *yc != yw.value)) {
                r.fail("word/circuit disagree on input " + x + ":\n" + format_netlist(C));
                break;
            }
        }
        if (r.pass && !is_isomorphic(circuit_of_word(w), C))
            r.fail("recompiled circuit not isomorphic:\n" + format_netlist(C));
        if (!r.pass) break;
        // the other direction: a random word compiled to a circuit
        GenWord u = random_gate_word(rng, rng.between(0, 8), i % 2 == 1);
        Circuit Cu = circuit_of_word(u);
        int mu = circuit_metrics(Cu).l_in;
        if (mu > 12) continue;
        for (const auto& x : all_words(mu)) {
            auto yc = eval_circuit(Cu, x);
            EvalResult yw = eval_word_on_input(u, x);
            bool wd = yw.status == EvalStatus::Defined;
            if (yc.has_value() != wd || (wd && *yc != yw.value)) {
                r.fail("compiled circuit disagrees with word '" + word_text(u) + "' on " + x);
                break;
            }
        }
    }
    return r;
}

inline SuiteReport monoid(uint64_t seed, int n) {
    SuiteReport r{"monoid", n};
    Rng rng(seed);
    RimTable id = identity_table(2);
    for (int i = 0; i < n && r.pass; ++i) {
        RimTable f = random_table(rng, rng.between(1, 4), 3);
        RimTable g = random_table(rng, rng.between(1, 4), 3);
        RimTable h = random_table(rng, rng.between(1, 4), 3);
        if (!equiv_fin(compose(h, compose(g, f)), compose(compose(h, g), f)))
            r.fail("associativity failed:\n" + format_table(f) + format_table(g) + format_table(h));
        if (!equiv_fin(compose(f, id), f) || !equiv_fin(compose(id, f), f))
            r.fail("identity law failed:\n" + format_table(f));
        RimTable gf = compose(g, f);
        for (int len = 0; len <= 7 && r.pass; ++len)
            for (const auto& x : all_words(len)) {
                auto direct = rim::apply(gf, x);
                auto fy = rim::apply(f, x);
                std::optional<Word> two = fy ? rim::apply(g, *fy) : std::nullopt;
                if (direct != two) {
                    r.fail("pointwise composition mismatch at x=" + x + ":\n" + format_table(f) +
                           format_table(g));
                    break;
                }
            }
    }
    return r;
}

inline SuiteReport factorization(uint64_t seed, int n_tables, int n_normal) {
    SuiteReport r{"factorization", n_tables + n_normal};
    Rng rng(seed);
    for (int i = 0; i < n_tables && r.pass; ++i) {
        RimTable f = random_nonempty_table(rng, rng.between(1, 4), 3);
        auto [nu, j] = injective_normal_factorization(f);
        if (!classify(j).injective) r.fail("j not injective:\n" + format_table(f));
        else if (!classify(nu).normal) r.fail("nu not normal:\n" + format_table(f));
        else if (!equiv_fin(compose(nu, j), f)) r.fail("nu o j != f:\n" + format_table(f));
    }
    for (int i = 0; i < n_normal && r.pass; ++i) {
        RimTable f = random_normal_table(rng, rng.between(1, 4));
        auto chain = normal_chain_decomposition(f);
        RimTable acc = identity_table(2);
        for (const auto& p : chain) {
            int drop = (int)p.rows.size() - (int)image_code(p).size();
            if (drop > 1) r.fail("chain piece drops more than one:\n" + format_table(f));
            acc = compose(acc, p);
        }
        if (r.pass && !equiv_fin(acc, f)) r.fail("chain does not compose to f:\n" + format_table(f));
    }
    return r;
}

inline SuiteReport regularity(uint64_t seed, int n) {
    SuiteReport r{"regularity", n};
    Rng rng(seed);
    for (int i = 0; i < n && r.pass; ++i) {
        RimTable f = random_table(rng, rng.between(1, 4), 3);
        RimTable fp = regular_inverse(f);
        if (!equiv_fin(compose(f, compose(fp, f)), f))
            r.fail("f o f' o f != f:\n" + format_table(f));
    }
    return r;
}

inline SuiteReport completion(uint64_t seed, int n) {
    SuiteReport r{"completion", n};
    Rng rng(seed);
    for (int i = 0; i < n && r.pass; ++i) {
        // M mode on an arbitrary table
        RimTable g = random_table(rng, rng.between(1, 4), 3);
        RimTable gb = nondet_table_complete(g, CompleteMode::M);
        if (!sector_membership(gb).in_F0) r.fail("M completion not in F0:\n" + format_table(g));
        else if (!equiv_fin(rho_project(gb), g)) r.fail("rho(M completion) != g:\n" + format_table(g));
        // plep mode on a pfl table
        int m = rng.between(1, 3);
        RimTable p = random_pfl_table(rng, m, rng.between(0, 3));
        RimTable pb = nondet_table_complete(p, CompleteMode::Plep);
        if (!sector_membership(pb).in_S0) r.fail("plep completion not in S0:\n" + format_table(p));
        else if (!equiv_fin(rho_project(pb), p))
            r.fail("rho(plep completion) != g:\n" + format_table(p));
        // rho is a homomorphism on each sector
        RimTable g2 = random_table(rng, rng.between(1, 4), 3);
        RimTable g2b = nondet_table_complete(g2, CompleteMode::M);
        if (!equiv_fin(rho_project(compose(g2b, gb)),
                       compose(rho_project(g2b), rho_project(gb))))
            r.fail("rho not homomorphic on F0:\n" + format_table(g) + format_table(g2));
        RimTable p2 = random_pfl_table(rng, rng.between(1, 3), rng.between(0, 3));
        RimTable p2b = nondet_table_complete(p2, CompleteMode::Plep);
        if (!equiv_fin(rho_project(compose(p2b, pb)),
                       compose(rho_project(p2b), rho_project(pb))))
            r.fail("rho not homomorphic on S0:\n" + format_table(p) + format_table(p2));
        // total elements admit a unique completion: no free choices remain
        RimTable t = random_total_table(rng, rng.between(1, 3), 3);
        CompletionPolicy alt;
        alt.m_complement = [](const Word&) { return Word("1"); };
        if (nondet_table_complete(t, CompleteMode::M).rows !=
            nondet_table_complete(t, CompleteMode::M, alt).rows)
            r.fail("completion of a total element depends on choices:\n" + format_table(t));
    }
    return r;
}

inline SuiteReport circuit_completion(uint64_t seed, int n) {
    SuiteReport r{"circuit-completion", n};
    Rng rng(seed);
    const int depth_constant = 16; // measured slack for the and/fork tree assembly
    for (int i = 0; i < n && r.pass; ++i) {
        Circuit C = sample_circuit(rng, 60, true, 10);
        Metrics mc = circuit_metrics(C);
        Circuit Cb = complete_circuit(C);
        Metrics mb = circuit_metrics(Cb);
        if (mb.l_in != mc.l_in + 1 || mb.l_out != mc.l_out + 1) {
            r.fail("completion length accounting wrong:\n" + format_netlist(C));
            break;
        }
        Word zeros(mc.l_out + 1, '0');
        for (const auto& x : all_words(mc.l_in)) {
            auto y = eval_circuit(C, x);
            auto y1 = eval_circuit(Cb, "1" + x);
            auto y0 = eval_circuit(Cb, "0" + x);
            Word want1 = y ? "1" + *y : zeros;
            if (!y1 || *y1 != want1 || !y0 || *y0 != zeros) {
                r.fail("completion semantics wrong at " + x + ":\n" + format_netlist(C));
                break;
            }
        }
        if (!r.pass) break;
        auto lg = [](int v) { int w = 0; while ((1 << w) < v) ++w; return w; };
        int s = std::max(1, mc.size);
        int bound = depth_constant + std::max(mc.depth, lg(s) + 2 * lg(mc.l_out + 1));
        if (mb.depth > bound) {
            std::ostringstream os;
            os << "completion depth " << mb.depth << " exceeds bound " << bound << ":\n"
               << format_netlist(C);
            r.fail(os.str());
        }
        // the classical wrapper: defined -> same value, undefined -> zeros
        Circuit Ct = tilde_circuit(C);
        for (const auto& x : all_words(mc.l_in)) {
            auto y = eval_circuit(C, x);
            auto yt = eval_circuit(Ct, x);
            Word want = y ? *y : Word(mc.l_out, '0');
            if (!yt || *yt != want) {
                r.fail("tilde circuit wrong at " + x + ":\n" + format_netlist(C));
                break;
            }
        }
    }
    return r;
}

inline SuiteReport word_completion(uint64_t seed, int n) {
    SuiteReport r{"word-completion", n};
    Rng rng(seed);
    for (int i = 0; i < n && r.pass; ++i) {
        GenWord w = random_gate_word(rng, rng.between(0, 6), true, 4);
        WordEval e = eval_word_symbolic(w);
        if (e.l_in > 10) continue;
        GenWord wb = complete_pfl_word(w);
        RimTable eb = eval_word_symbolic(wb).table;
        if (!sector_membership(eb).in_S0) {
            r.fail("completed word not in S0: " + word_text(w));
            break;
        }
        if (!equiv_fin(rho_project(eb), e.table))
            r.fail("rho(completed word) != E_w: " + word_text(w));
        GenWord wm = random_monoid_word(rng, rng.between(1, 6));
        RimTable em = eval_word_symbolic(wm).table;
        RimTable cm = complete_M_generators(wm);
        if (!sector_membership(cm).in_F0) r.fail("M completion word not in F0: " + word_text(wm));
        else if (!equiv_fin(rho_project(cm), em))
            r.fail("rho(M completion) != E_w: " + word_text(wm));
    }
    return r;
}

inline SuiteReport decomposition(uint64_t seed, int n) {
    SuiteReport r{"decomposition", n};
    Rng rng(seed);
    for (int i = 0; i < n && r.pass; ++i) {
        GenWord w = sample_monoid_word(rng, 10, 4096, 14);
        RimTable ew = eval_word_symbolic(w).table;
        TaggedWordSet seq = decompose_word_sequential(w);
        // (a) the unambiguous union of the pieces is the original element
        std::vector<RimTable> pieces;
        for (const auto& e : seq.entries) pieces.push_back(e.table);
        if (!equiv_fin(unambiguous_union_tables(pieces), ew)) {
            r.fail("piece union != E_w: " + word_text(w));
            break;
        }
        // (b) pairwise disjoint domains (prefix-incomparable codes is
        // equivalent to exhaustive refinement at the common level)
        for (size_t a = 0; a < pieces.size() && r.pass; ++a)
            for (size_t b = a + 1; b < pieces.size() && r.pass; ++b)
                for (const auto& [x1, y1] : pieces[a].rows)
                    for (const auto& [x2, y2] : pieces[b].rows)
                        if (prefix_comparable(x1, x2)) {
                            r.fail("piece domains overlap: " + word_text(w));
                            goto disjoint_done;
                        }
    disjoint_done:
        if (!r.pass) break;
        // (c) tags match the evaluations' length differences
        for (const auto& e : seq.entries) {
            auto d = delta(e.table);
            if (!d || *d != e.dvalue) {
                r.fail("piece delta tag mismatch: " + word_text(w));
                break;
            }
            RimTable piece_eval = eval_word_symbolic(e.word).table;
            if (!equiv_fin(piece_eval, e.table)) {
                r.fail("piece word does not evaluate to its table: " + word_text(w));
                break;
            }
        }
        if (!r.pass) break;
        // (d) parallel output extensionally equal
        TaggedWordSet par = decompose_word_parallel(w);
        if (par.entries.size() != seq.entries.size()) {
            r.fail("sequential/parallel piece counts differ: " + word_text(w));
            break;
        }
        for (size_t a = 0; a < par.entries.size(); ++a) {
            if (par.entries[a].dvalue != seq.entries[a].dvalue ||
                !equiv_fin(par.entries[a].table, seq.entries[a].table)) {
                r.fail("sequential/parallel pieces differ: " + word_text(w));
                break;
            }
        }
        if (!r.pass) break;
        // (e) pieces match the direct table decomposition, index by delta
        if (!ew.is_theta()) {
            auto groups = decompose_table_by_output_length(ew);
            if (groups.size() != seq.entries.size()) {
                r.fail("piece count != table decomposition: " + word_text(w));
                break;
            }
            for (const auto& g : groups) {
                int d = *delta(g);
                bool found = false;
                for (const auto& e : seq.entries)
                    if (e.dvalue == d) {
                        found = true;
                        if (!equiv_fin(e.table, g)) r.fail("piece != table group: " + word_text(w));
                    }
                if (!found) r.fail("missing piece for delta " + std::to_string(d) + ": " + word_text(w));
                if (!r.pass) break;
            }
        } else if (!seq.entries.empty()) {
            r.fail("theta word produced pieces: " + word_text(w));
        }
    }
    return r;
}

inline SuiteReport union_algebra(uint64_t seed, int n) {
    SuiteReport r{"union-algebra", n};
    Rng rng(seed);
    // pinned fragment identities
    for (const char* base : {"a1", "a2", "a8"}) {
        std::vector<GenWord> frag_words;
        std::vector<UnionExpr> frag_exprs;
        for (const auto& [full, frs] :
             std::map<std::string, std::vector<std::string>>{{"a1", {"a1_-1", "a1_0", "a1_1"}},
                                                             {"a2", {"a2_-1", "a2_0", "a2_1"}},
                                                             {"a8", {"a8_0", "a8_1"}}}) {
            if (full != base) continue;
            for (const auto& f : frs) {
                frag_words.push_back(make_word({named_sym(f)}));
                frag_exprs.push_back(UnionExpr::of(frag_words.back()));
            }
        }
        RimTable full_table = generator_registry().at(base);
        if (!equiv_fin(eval_union_expr(UnionExpr::unite(frag_exprs)), full_table))
            r.fail(std::string("fragment union expression != ") + base);
        GenWord merged = merge_mixed_delta(frag_words);
        if (!equiv_fin(eval_word_symbolic(merged).table, full_table))
            r.fail(std::string("merge_mixed_delta of fragments != ") + base);
    }
    for (int i = 0; i < n && r.pass; ++i) {
        // same-delta merge of random disjoint pfl branches
        int m = rng.between(1, 3);
        int nn = rng.between(1, 3);
        std::vector<RimTable> branch_tables;
        std::vector<GenWord> branch_words;
        std::set<Word> used;
        int k = rng.between(1, 3);
        for (int b = 0; b < k; ++b) {
            RimTable t;
            for (const auto& x : all_words(m))
                if (!used.count(x) && rng.chance(0.35)) {
                    used.insert(x);
                    t.rows[x] = random_word_of_length(rng, nn);
                }
            if (t.is_theta()) continue;
            branch_tables.push_back(t);
            branch_words.push_back(word_of_circuit(detail::merge_tables_to_circuit({t}, m)));
        }
        if (branch_tables.empty()) continue;
        MergeResult mr = merge_same_delta(branch_words);
        RimTable want = detail::union_of_disjoint(branch_tables);
        if (!equiv_fin(circuit_table(mr.circuit), want) ||
            !equiv_fin(eval_word_symbolic(mr.word).table, want)) {
            r.fail("same-delta merge wrong (m=" + std::to_string(m) + "):\n" + format_table(want));
            break;
        }
        // recombination: compose two decompositions and compare with the
        // composed element
        GenWord wu = sample_monoid_word(rng, 4, 512, 10);
        GenWord wv = sample_monoid_word(rng, 4, 512, 10);
        TaggedWordSet U = decompose_word_sequential(wu);
        TaggedWordSet V = decompose_word_sequential(wv);
        TaggedWordSet W = compose_tagged_sets(U, V);
        std::vector<RimTable> pieces;
        for (const auto& e : W.entries) pieces.push_back(e.table);
        RimTable direct = compose(eval_word_symbolic(wv).table, eval_word_symbolic(wu).table);
        RimTable glued = pieces.empty() ? RimTable{2, {}} : unambiguous_union_tables(pieces);
        if (!equiv_fin(glued, direct)) {
            r.fail("tagged composition recombination failed: " + word_text(wu) + " ; " +
                   word_text(wv));
            break;
        }
        for (const auto& e : W.entries) {
            if (!equiv_fin(eval_word_symbolic(e.word).table, e.table)) {
                r.fail("composed entry word/table mismatch: " + word_text(e.word));
                break;
            }
        }
    }
    return r;
}

inline SuiteReport appendix(uint64_t seed, int n) {
    SuiteReport r{"appendix", n};
    Rng rng(seed);
    int empties = 0;
    for (int i = 0; i < n && r.pass; ++i) {
        GenWord w;
        if (i % 10 == 0) {
            // a guaranteed-empty instance: the non-satisfiability reduction of
            // a constant-0 circuit, padded with random total prefix gates
            std::vector<GenSym> pad;
            for (int p = rng.between(0, 1); p > 0; --p) pad.push_back(named_sym("not"));
            GenWord c0 = make_word({named_sym("and"), named_sym("not"), tau_sym(1, 2),
                                    named_sym("fork")});
            Circuit C = circuit_of_word(c0);
            GenWord red = nonsat_reduce(C);
            pad.insert(pad.end(), red.syms.begin(), red.syms.end());
            w = make_word(std::move(pad));
        } else {
            w = random_gate_word(rng, rng.between(0, 5), true, 3);
        }
        bool symbolic_empty = eval_word_symbolic(w).table.is_theta();
        bool oracle_empty = emptiness_check(w, 16);
        if (symbolic_empty != oracle_empty) {
            r.fail("emptiness oracle/symbolic mismatch: " + word_text(w));
            break;
        }
        if (oracle_empty) empties++;
        auto d = delta_compute(w, 16);
        if (oracle_empty && d) r.fail("delta defined on empty word: " + word_text(w));
        if (!oracle_empty && (!d || *d != word_delta_sum(w)))
            r.fail("delta_compute != symbol sum: " + word_text(w));
    }
    if (r.pass && empties < std::min(n / 10, 20))
        r.fail("too few genuinely empty instances: " + std::to_string(empties));
    return r;
}

inline SuiteReport delta_laws(uint64_t seed, int n) {
    SuiteReport r{"delta-laws", n};
    Rng rng(seed);
    if (delta_set(generator_registry().at("a1")) != std::set<int>{-1, 0, 1})
        r.fail("delta set of a1 is not {-1,0,1}");
    for (int i = 0; i < n && r.pass; ++i) {
        // plep additivity
        RimTable f = random_pfl_table(rng, rng.between(1, 3), rng.between(0, 3));
        RimTable g = random_pfl_table(rng, rng.between(1, 3), rng.between(0, 3));
        RimTable gf = compose(g, f);
        if (!gf.is_theta()) {
            auto d = delta(gf);
            if (!d || *d != *delta(f) + *delta(g))
                r.fail("plep delta not additive:\n" + format_table(f) + format_table(g));
        }
        // general containment: the delta set of a composition is inside the
        // element-wise sum of the delta sets
        RimTable a = random_table(rng, rng.between(1, 4), 3);
        RimTable b = random_table(rng, rng.between(1, 4), 3);
        RimTable ba = compose(b, a);
        std::set<int> sums;
        for (int x : delta_set(a))
            for (int y : delta_set(b)) sums.insert(x + y);
        for (int d : delta_set(ba))
            if (!sums.count(d)) {
                r.fail("delta set containment failed:\n" + format_table(a) + format_table(b));
                break;
            }
    }
    return r;
}

} // namespace suites

inline const std::map<std::string, SuiteFn>& suite_registry() {
    static const std::map<std::string, SuiteFn> reg = {
        {"codec", [](uint64_t s, int n) { return suites::codec(s, n); }},
        {"compiler", [](uint64_t s, int n) { return suites::compiler(s, n); }},
        {"monoid", [](uint64_t s, int n) { return suites::monoid(s, n); }},
        {"factorization", [](uint64_t s, int n) { return suites::factorization(s, n, n / 3 + 1); }},
        {"regularity", [](uint64_t s, int n) { return suites::regularity(s, n); }},
        {"completion", [](uint64_t s, int n) { return suites::completion(s, n); }},
        {"word-completion", [](uint64_t s, int n) { return suites::word_completion(s, n); }},
        {"circuit-completion", [](uint64_t s, int n) { return suites::circuit_completion(s, n); }},
        {"decomposition", [](uint64_t s, int n) { return suites::decomposition(s, n); }},
        {"union-algebra", [](uint64_t s, int n) { return suites::union_algebra(s, n); }},
        {"appendix", [](uint64_t s, int n) { return suites::appendix(s, n); }},
        {"delta-laws", [](uint64_t s, int n) { return suites::delta_laws(s, n); }},
    };
    return reg;
}

} // namespace rim
