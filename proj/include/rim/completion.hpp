#pragma once
// Completion procedures: the classical totalization ~, the injective
// three-letter completion, the sector projection rho with its
// nondeterministic table completion, generator-word completion, and circuit
// completion.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rim/builder.hpp"
#include "rim/convert.hpp"
#include "rim/genword.hpp"
#include "rim/table.hpp"

namespace rim {

// f~ : total extension of f.  For a non-theta table with all domain words of
// one length m and all images of one length (the pfl shape) the missing rows
// of {0,1}^m map to the all-zero image; otherwise the complement code is
// adjoined with image "0".  Fixed point exactly on total tables.
inline RimTable tilde_complete(const RimTable& f) {
    if (f.k != 2) throw alphabet_error("tilde_complete: k must be 2");
    std::vector<Word> P = dom_code(f);
    if (is_maximal_code(P, 2)) return f;
    RimTable out = f;
    std::set<size_t> domlens, imglens;
    for (const auto& [x, y] : f.rows) {
        domlens.insert(x.size());
        imglens.insert(y.size());
    }
    if (!f.is_theta() && domlens.size() == 1 && imglens.size() == 1) {
        int m = (int)*domlens.begin();
        Word zero(*imglens.begin(), '0');
        for (const auto& x : all_words(m))
            if (!out.rows.count(x)) out.rows[x] = zero;
    } else {
        for (const auto& q : complement_code(P, 2)) out.rows[q] = "0";
    }
    return out;
}

// Injective completion over {0,1,2} with 2 as the bottom symbol: the domain
// is domC(f) u Q u spref(domC u Q)*2 (a maximal code over three letters);
// non-f rows map to "2".
inline RimTable three_letter_complete(const RimTable& f) {
    if (f.k != 2) throw alphabet_error("three_letter_complete: k must be 2");
    std::vector<Word> P = dom_code(f);
    std::vector<Word> Q = complement_code(P, 2);
    std::vector<Word> PQ = P;
    PQ.insert(PQ.end(), Q.begin(), Q.end());
    RimTable out{3, {}};
    for (const auto& d : expand_with_sentinel(PQ)) {
        auto it = f.rows.find(d);
        out.rows[d] = (it != f.rows.end()) ? it->second : "2";
    }
    return out;
}

struct SectorMembership {
    bool in_F0 = false; // fixes the 0-sector pointwise
    bool in_S0 = false; // maps the 0-sector into itself
};

inline SectorMembership sector_membership(const RimTable& f) {
    if (!is_maximal_code(dom_code(f), f.k)) throw domain_error("sector_membership: f must be total");
    SectorMembership s{true, true};
    for (const auto& [x, y] : canonicalize(f).rows) {
        if (x.empty()) {
            s.in_F0 = s.in_F0 && y.empty();
            s.in_S0 = s.in_S0 && (y.empty() || y[0] == '0');
        } else if (x[0] == '0') {
            s.in_F0 = s.in_F0 && y == x;
            s.in_S0 = s.in_S0 && !y.empty() && y[0] == '0';
        }
    }
    return s;
}

// rho: keep the rows sent from the 1-sector into the 1-sector and strip the
// marker from both sides.  Defined on the 0-sector stabilizer.
inline RimTable rho_project(const RimTable& fbar) {
    SectorMembership s = sector_membership(fbar);
    if (!s.in_S0) throw domain_error("rho_project: argument does not stabilize the 0-sector");
    RimTable can = canonicalize(fbar);
    RimTable out{fbar.k, {}};
    std::vector<std::pair<Word, Word>> rows;
    for (const auto& [x0, y0] : can.rows) {
        // split a root row so every considered row starts with an explicit letter
        if (x0.empty())
            for (int c = 0; c < fbar.k; ++c)
                rows.push_back({Word(1, char('0' + c)), y0 + char('0' + c)});
        else
            rows.push_back({x0, y0});
    }
    // a 1-sector row with an empty image sits in whichever sector its suffix
    // starts with; refine until every such image shows its first letter
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].first[0] != '1' || !rows[i].second.empty()) continue;
        for (int c = 0; c < fbar.k; ++c)
            rows.push_back({rows[i].first + char('0' + c), Word(1, char('0' + c))});
        rows.erase(rows.begin() + i);
        --i;
    }
    for (const auto& [x, y] : rows)
        if (x[0] == '1' && y[0] == '1') out.rows[x.substr(1)] = y.substr(1);
    return out;
}

enum class CompleteMode { M, Plep };

// Deterministic stand-ins for the nondeterministic choices: the image suffix
// for complement rows and the 0-block pairing in the plep layout.
struct CompletionPolicy {
    // M mode: complement row 1x' -> "0" + m_complement(x')
    std::function<Word(const Word&)> m_complement = [](const Word&) { return Word(); };
    // plep mode: 0-block row 0u -> "0" + plep_zero(u, n) (|result| must be n)
    std::function<Word(const Word&, int)> plep_zero = [](const Word& u, int n) {
        Word v = u.substr(0, std::min<size_t>(u.size(), n));
        v.resize(n, '0');
        return v;
    };
    // plep mode: complement row 1x' -> "0" + plep_complement(x', n)
    std::function<Word(const Word&, int)> plep_complement = [](const Word&, int n) {
        return Word(n, '0');
    };
};

// gbar with rho_project(gbar) == g (finite-difference sense).  M mode builds
// the 0-fixator {0->0} u 1*g u complement rows; plep mode the four-block
// stabilizer at uniform input length m+1 / output length n+1.  For total g in
// M mode there is nothing to choose and the completion is unique.
inline RimTable nondet_table_complete(const RimTable& g, CompleteMode mode,
                                      const CompletionPolicy& policy = {}) {
    if (g.k != 2) throw alphabet_error("nondet_table_complete: k must be 2");
    RimTable out{2, {}};
    if (mode == CompleteMode::M) {
        out.rows["0"] = "0";
        for (const auto& [x, y] : g.rows) out.rows["1" + x] = "1" + y;
        for (const auto& q : complement_code(dom_code(g), 2))
            out.rows["1" + q] = "0" + policy.m_complement(q);
        return out;
    }
    if (g.is_theta()) throw domain_error("nondet_table_complete: plep mode needs a non-theta pfl table");
    Classification c = classify(g);
    if (!c.pfl) throw domain_error("nondet_table_complete: plep mode requires a pfl table");
    int m = (int)g.rows.begin()->first.size();
    int n = m + *delta(g);
    for (const auto& u : all_words(m)) {
        Word v = policy.plep_zero(u, n);
        if ((int)v.size() != n) throw domain_error("nondet_table_complete: policy image length mismatch");
        out.rows["0" + u] = "0" + v;
        auto it = g.rows.find(u);
        if (it != g.rows.end()) out.rows["1" + u] = "1" + it->second;
        else out.rows["1" + u] = "0" + policy.plep_complement(u, n);
    }
    return out;
}

// ---------------------------------------------------------------------------
// circuit completion
// ---------------------------------------------------------------------------

namespace detail {

// Shared core: rebuild C with every zeta1 bypassed (its data wire passes
// through, its control wire feeding a NOT that reports validity), AND the
// validity wires (plus an optional extra conjunct), fan the result out and
// mask every data output with it.  Output j of the result is
// valid AND y_j; `lead` selects whether the validity bit itself is emitted
// as an extra first output.
inline Circuit completion_core(const Circuit& C, bool with_marker) {
    Diagnostics dg = validate(C);
    if (!dg.ok) throw circuit_error("circuit completion: invalid circuit: " + dg.issues.front());
    Metrics met = circuit_metrics(C);
    int n = met.l_out;
    int shift = with_marker ? 1 : 0;
    CircuitBuilder B;
    int marker = -1;
    if (with_marker) marker = B.input(1);
    std::vector<int> map(C.v.size(), -1);
    std::vector<int> validity;
    std::vector<std::pair<int, int>> outs; // (var, source) of original outputs
    for (size_t i = 0; i < C.v.size(); ++i) {
        const Vertex& x = C.v[i];
        switch (x.kind) {
            case Gate::Input: map[i] = B.input(x.var + shift); break;
            case Gate::Output: outs.push_back({x.var, map[x.a]}); break;
            case Gate::Zeta1:
                map[i] = map[x.b];
                validity.push_back(B.add(Gate::Not, map[x.a]));
                break;
            default: {
                Vertex y = x;
                y.a = map[x.a];
                if (x.b >= 0) y.b = map[x.b];
                map[i] = B.add(y.kind, y.a, y.b, 0);
                break;
            }
        }
    }
    std::vector<int> conj = validity;
    if (with_marker) conj.push_back(marker);
    if (conj.empty()) {
        // boolean circuit, no marker: nothing to complete
        Circuit out = C;
        return out;
    }
    int valid = B.and_tree(conj);
    int copies_needed = n + (with_marker ? 1 : 0);
    std::vector<int> copies = B.fork_tree(valid, std::max(copies_needed, 1));
    size_t ci = 0;
    if (with_marker) B.output(1, copies[ci++]);
    std::sort(outs.begin(), outs.end());
    for (const auto& [var, src] : outs) B.output(var + shift, B.add(Gate::And, copies[ci++], src));
    if (copies_needed == 0) {
        // no outputs at all: consume the validity wire with a throwaway output
        B.output(1, copies[0]);
    }
    return B.take();
}

} // namespace detail

// Total boolean circuit computing the 0-sector completion: on 1x it returns
// 1*C(x) when C is defined on x and 0^{n+1} otherwise; on 0x it returns
// 0^{n+1}.  l_in and l_out both grow by exactly 1.
inline Circuit complete_circuit(const Circuit& C) { return detail::completion_core(C, true); }

// Boolean circuit for the classical totalization: C(x) when defined, 0^n
// otherwise; same l_in and l_out.
inline Circuit tilde_circuit(const Circuit& C) { return detail::completion_core(C, false); }

// ---------------------------------------------------------------------------
// generator-word completion
// ---------------------------------------------------------------------------

// Fixed completion words for the partial-gate generators, over the total gate
// alphabet: built once by completing the one-gate circuit and recompiling.
inline const std::map<std::string, std::vector<GenSym>>& pfl_completion_registry() {
    static const std::map<std::string, std::vector<GenSym>> reg = [] {
        std::map<std::string, std::vector<GenSym>> r;
        for (const char* nm : {"not", "and", "or", "fork", "zeta1"}) {
            GenWord one = make_word({named_sym(nm)});
            Circuit C = circuit_of_word(one);
            r[nm] = word_of_circuit(complete_circuit(C)).syms;
        }
        return r;
    }();
    return reg;
}

// wbar over the total gate alphabet with E_{wbar} in S0 and
// rho(E_{wbar}) == E_w: transpositions shift by one, gates are replaced by
// their registered completion words.
inline GenWord complete_pfl_word(const GenWord& w) {
    if (w.tag != Alphabet::Tfl && w.tag != Alphabet::Pfl)
        throw alphabet_error("complete_pfl_word: word must be over the gate alphabet");
    std::vector<GenSym> out;
    for (const auto& s : w.syms) {
        if (s.tau) {
            out.push_back(tau_sym(s.i + 1, s.j + 1));
        } else {
            const auto& rep = pfl_completion_registry().at(s.name);
            out.insert(out.end(), rep.begin(), rep.end());
        }
    }
    return make_word(std::move(out), Alphabet::Tfl);
}

// Composite table of the 0-fixator completions: abar_i for the monoid
// generators and the shifted transpositions (identity on the 0-sector).
inline RimTable complete_M_generators(const GenWord& w) {
    const auto& mnames = alphabet_names(Alphabet::M);
    for (const auto& s : w.syms)
        if (!s.tau && !mnames.count(s.name))
            throw alphabet_error("complete_M_generators: word must be over the monoid alphabet");
    static const std::map<std::string, RimTable> abar = [] {
        std::map<std::string, RimTable> r;
        for (const auto& nm : alphabet_names(Alphabet::M))
            r[nm] = nondet_table_complete(generator_registry().at(nm), CompleteMode::M);
        return r;
    }();
    RimTable acc = identity_table(2);
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        RimTable t;
        if (it->tau) {
            t.rows["0"] = "0";
            for (const auto& u : all_words(it->j)) {
                Word v = u;
                std::swap(v[it->i - 1], v[it->j - 1]);
                t.rows["1" + u] = "1" + v;
            }
        } else {
            t = abar.at(it->name);
        }
        acc = compose(t, acc);
    }
    return acc;
}

} // namespace rim
