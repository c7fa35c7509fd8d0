#pragma once
// Generator words over the fixed alphabets (gate generators, the total and
// partial monoid generators a0..a8 with their one-row fragments, the union
// gate zeta, the eraser e, and wire transpositions t(i,j)).
//
// Word text order is composition order: the leftmost symbol is applied last.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rim/circuit.hpp"
#include "rim/table.hpp"

namespace rim {

struct GenSym {
    bool tau = false;
    int i = 0, j = 0;  // transposition indices, 1 <= i < j
    std::string name;  // generator name when !tau

    bool operator==(const GenSym& o) const {
        return tau == o.tau && i == o.i && j == o.j && name == o.name;
    }
};

inline GenSym tau_sym(int i, int j) {
    if (!(1 <= i && i < j)) throw domain_error("t(i,j) requires 1 <= i < j");
    GenSym s;
    s.tau = true;
    s.i = i;
    s.j = j;
    return s;
}

inline GenSym named_sym(const std::string& name) {
    GenSym s;
    s.name = name;
    return s;
}

enum class Alphabet { Tfl, Pfl, M, Mpfl, RM };

inline const char* alphabet_name(Alphabet a) {
    switch (a) {
        case Alphabet::Tfl: return "tfl";
        case Alphabet::Pfl: return "pfl";
        case Alphabet::M: return "m";
        case Alphabet::Mpfl: return "mpfl";
        case Alphabet::RM: return "rm";
    }
    return "?";
}

inline std::optional<Alphabet> parse_alphabet(const std::string& s) {
    if (s == "tfl") return Alphabet::Tfl;
    if (s == "pfl") return Alphabet::Pfl;
    if (s == "m") return Alphabet::M;
    if (s == "mpfl") return Alphabet::Mpfl;
    if (s == "rm") return Alphabet::RM;
    return std::nullopt;
}

struct GenWord {
    std::vector<GenSym> syms; // text order (leftmost applied last)
    Alphabet tag = Alphabet::RM;
};

// ---------------------------------------------------------------------------
// generator registry
// ---------------------------------------------------------------------------

inline const std::map<std::string, RimTable>& generator_registry() {
    static const std::map<std::string, RimTable> reg = [] {
        std::map<std::string, RimTable> r;
        auto tab = [](std::map<Word, Word> rows) { return RimTable{2, std::move(rows)}; };
        r["not"] = gate_table(Gate::Not, 1);
        r["and"] = gate_table(Gate::And, 1);
        r["or"] = gate_table(Gate::Or, 1);
        r["fork"] = gate_table(Gate::Fork, 1);
        r["zeta1"] = gate_table(Gate::Zeta1, 1);
        r["zeta"] = tab({{"00", ""}, {"01", ""}, {"10", "0"}, {"11", "1"}});
        r["e"] = tab({{"1", ""}});
        r["a0"] = tab({{"0", "1"}, {"1", "0"}});
        r["a1"] = tab({{"00", "00"}, {"01", "1"}, {"1", "01"}});
        r["a2"] = tab({{"0", "10"}, {"10", "0"}, {"11", "11"}});
        r["a3"] = tab({{"", "0"}});
        r["a4"] = tab({{"0", ""}});
        r["a5"] = tab({{"0", "00"}});
        r["a6"] = tab({{"00", "0"}});
        r["a7"] = tab({{"0", "0"}, {"1", "0"}});
        r["a8"] = tab({{"0", "0"}, {"1", "01"}});
        r["a1_-1"] = tab({{"01", "1"}});
        r["a1_0"] = tab({{"00", "00"}});
        r["a1_1"] = tab({{"1", "01"}});
        r["a2_-1"] = tab({{"10", "0"}});
        r["a2_0"] = tab({{"11", "11"}});
        r["a2_1"] = tab({{"0", "10"}});
        r["a8_0"] = tab({{"0", "0"}});
        r["a8_1"] = tab({{"1", "01"}});
        return r;
    }();
    return reg;
}

inline const std::set<std::string>& alphabet_names(Alphabet a) {
    static const std::set<std::string> tfl = {"not", "and", "or", "fork"};
    static const std::set<std::string> pfl = {"not", "and", "or", "fork", "zeta1"};
    static const std::set<std::string> m = {"a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"};
    static const std::set<std::string> mpfl = {"a0",   "a3",    "a4",   "a5",   "a6",
                                              "a7",   "a1_-1", "a1_0", "a1_1", "a2_-1",
                                              "a2_0", "a2_1",  "a8_0", "a8_1"};
    static const std::set<std::string> rmset = [] {
        std::set<std::string> s = mpfl;
        s.insert(pfl.begin(), pfl.end());
        s.insert("zeta");
        s.insert("e");
        return s;
    }();
    switch (a) {
        case Alphabet::Tfl: return tfl;
        case Alphabet::Pfl: return pfl;
        case Alphabet::M: return m;
        case Alphabet::Mpfl: return mpfl;
        case Alphabet::RM: return rmset;
    }
    return rmset;
}

// Table of a single symbol (tau tables are built on demand).
inline RimTable sym_table(const GenSym& s) {
    if (s.tau) return tau_table(s.i, s.j);
    auto it = generator_registry().find(s.name);
    if (it == generator_registry().end())
        throw alphabet_error("unknown generator '" + s.name + "'");
    return it->second;
}

// Smallest alphabet (tfl < pfl < m < mpfl < rm) containing all non-tau
// symbols of the word; alphabet_error if none does.
inline Alphabet infer_tag(const std::vector<GenSym>& syms) {
    for (Alphabet a : {Alphabet::Tfl, Alphabet::Pfl, Alphabet::M, Alphabet::Mpfl, Alphabet::RM}) {
        const auto& names = alphabet_names(a);
        bool ok = true;
        for (const auto& s : syms)
            if (!s.tau && !names.count(s.name)) { ok = false; break; }
        if (ok) return a;
    }
    std::string bad;
    for (const auto& s : syms)
        if (!s.tau) bad = s.name;
    throw alphabet_error("symbol '" + bad + "' not in any alphabet");
}

inline GenWord make_word(std::vector<GenSym> syms) {
    GenWord w;
    w.tag = infer_tag(syms);
    w.syms = std::move(syms);
    return w;
}

inline GenWord make_word(std::vector<GenSym> syms, Alphabet tag) {
    const auto& names = alphabet_names(tag);
    for (const auto& s : syms)
        if (!s.tau && !names.count(s.name))
            throw alphabet_error("symbol '" + s.name + "' not in alphabet " +
                                 alphabet_name(tag));
    GenWord w;
    w.tag = tag;
    w.syms = std::move(syms);
    return w;
}

// ---------------------------------------------------------------------------
// token syntax: t(i,j) for transpositions, registry names otherwise
// ---------------------------------------------------------------------------

inline std::string sym_token(const GenSym& s) {
    if (s.tau) return "t(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
    return s.name;
}

inline GenSym parse_sym(const std::string& tok) {
    if (tok.size() >= 6 && tok.rfind("t(", 0) == 0 && tok.back() == ')') {
        size_t comma = tok.find(',');
        if (comma == std::string::npos) throw usage_error("bad transposition token '" + tok + "'");
        try {
            int i = std::stoi(tok.substr(2, comma - 2));
            int j = std::stoi(tok.substr(comma + 1, tok.size() - comma - 2));
            return tau_sym(i, j);
        } catch (const std::logic_error&) {
            throw usage_error("bad transposition token '" + tok + "'");
        }
    }
    if (!generator_registry().count(tok)) throw alphabet_error("unknown generator '" + tok + "'");
    return named_sym(tok);
}

inline std::string word_text(const GenWord& w) {
    std::string s;
    for (size_t i = 0; i < w.syms.size(); ++i) {
        if (i) s += ' ';
        s += sym_token(w.syms[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------------

struct WordEval {
    RimTable table;
    int l_in = 0; // symbolic required input length
};

// Composes the stage tables T_i = w_i o ... o w_1 (rightmost symbol first)
// and records l_in = max_i maxlen(domC(T_i)); this equals the least input
// length at which the word is decided pointwise on every stage.
inline WordEval eval_word_symbolic(const GenWord& w) {
    WordEval e;
    e.table = identity_table(2);
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        e.table = compose(sym_table(*it), e.table);
        e.l_in = std::max(e.l_in, maxlen_dom(e.table));
    }
    return e;
}

enum class EvalStatus { Defined, Undefined, TooShort };

struct EvalResult {
    EvalStatus status = EvalStatus::Undefined;
    Word value;
};

// Pointwise evaluation, symbol by symbol (independent oracle for the
// symbolic composition).  TooShort means some stage could not decide on the
// given prefix but might on an extension.
inline EvalResult eval_word_on_input(const GenWord& w, const Word& x) {
    require_word(x, 2, "eval_word_on_input");
    Word cur = x;
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        RimTable t = sym_table(*it);
        bool applied = false;
        for (const auto& [p, y] : t.rows) {
            if (is_prefix(p, cur)) {
                cur = y + cur.substr(p.size());
                applied = true;
                break;
            }
        }
        if (applied) continue;
        for (const auto& [p, y] : t.rows)
            if (is_prefix(cur, p)) return {EvalStatus::TooShort, Word()};
        return {EvalStatus::Undefined, Word()};
    }
    return {EvalStatus::Defined, cur};
}

struct WordMetrics {
    int l_in = 0, l_out = 0;
    int gamma_count = 0;   // non-transposition symbols
    int tau_count = 0;
    int max_tau_index = 0;
};

inline WordMetrics word_metrics(const GenWord& w) {
    WordMetrics m;
    WordEval e = eval_word_symbolic(w);
    m.l_in = e.l_in;
    std::set<int> outlens;
    for (const auto& [x, y] : e.table.rows)
        outlens.insert((int)y.size() + (m.l_in - (int)x.size()));
    m.l_out = outlens.empty() ? 0 : *outlens.rbegin();
    for (const auto& s : w.syms) {
        if (s.tau) {
            m.tau_count++;
            m.max_tau_index = std::max(m.max_tau_index, s.j);
        } else {
            m.gamma_count++;
        }
    }
    return m;
}

// Sum of the per-generator length changes; requires every non-tau symbol to
// have a single-valued delta (the plep generators).
inline int word_delta_sum(const GenWord& w) {
    int d = 0;
    for (const auto& s : w.syms) {
        if (s.tau) continue;
        auto dd = delta(sym_table(s));
        if (!dd) throw domain_error("word_delta_sum: generator '" + s.name + "' is not plep");
        d += *dd;
    }
    return d;
}

// Depth of the word seen as a layered computation: each generator occurrence
// is a box consuming the matched row prefix of the current signal vector and
// emitting its image bits at depth 1 + max(consumed depths, 0);
// transpositions are free.  The result is the maximum box depth over all
// defined inputs of length l_in.
inline int word_depth(const GenWord& w, int cap = 20) {
    WordEval e = eval_word_symbolic(w);
    if (e.l_in > cap) throw resource_error("word_depth: l_in exceeds cap");
    int best = 0;
    for (const auto& x : all_words(e.l_in)) {
        std::vector<std::pair<char, int>> sig;
        for (char c : x) sig.push_back({c, 0});
        bool dead = false;
        int mx = 0;
        for (auto it = w.syms.rbegin(); it != w.syms.rend() && !dead; ++it) {
            if (it->tau) {
                if ((int)sig.size() < it->j) { dead = true; break; }
                std::swap(sig[it->i - 1], sig[it->j - 1]);
                continue;
            }
            RimTable t = sym_table(*it);
            bool applied = false;
            for (const auto& [p, y] : t.rows) {
                if (p.size() > sig.size()) continue;
                bool match = true;
                for (size_t q = 0; q < p.size(); ++q)
                    if (sig[q].first != p[q]) { match = false; break; }
                if (!match) continue;
                int d = 1;
                for (size_t q = 0; q < p.size(); ++q) d = std::max(d, sig[q].second + 1);
                std::vector<std::pair<char, int>> nxt;
                for (char c : y) nxt.push_back({c, d});
                nxt.insert(nxt.end(), sig.begin() + p.size(), sig.end());
                sig.swap(nxt);
                mx = std::max(mx, d);
                applied = true;
                break;
            }
            if (!applied) dead = true;
        }
        if (!dead) best = std::max(best, mx);
    }
    return best;
}

} // namespace rim
