#pragma once
// Unambiguous unions of partial circuits: {., !u}-expressions, merging a
// disjoint family of partial-circuit words into one circuit/word (same
// length difference) or one word over the extended alphabet (mixed length
// differences), composition of tagged unions, and the decomposition of a
// monoid word into an unambiguous union of partial circuits (sequential and
// parallel variants).

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rim/builder.hpp"
#include "rim/convert.hpp"
#include "rim/genword.hpp"
#include "rim/table.hpp"

namespace rim {

// ---------------------------------------------------------------------------
// {., !u}-expressions
// ---------------------------------------------------------------------------

struct UnionExpr {
    enum Kind { WordNode, ConcatNode, UnionNode };
    Kind kind = WordNode;
    GenWord word;                  // WordNode
    std::vector<UnionExpr> kids;   // ConcatNode: {outer, inner}; UnionNode: >= 2

    static UnionExpr of(GenWord w) {
        UnionExpr e;
        e.kind = WordNode;
        e.word = std::move(w);
        return e;
    }
    static UnionExpr concat(UnionExpr outer, UnionExpr inner) {
        UnionExpr e;
        e.kind = ConcatNode;
        e.kids.push_back(std::move(outer));
        e.kids.push_back(std::move(inner));
        return e;
    }
    static UnionExpr unite(std::vector<UnionExpr> kids) {
        if (kids.size() < 2) throw domain_error("UnionExpr: union arity must be >= 2");
        UnionExpr e;
        e.kind = UnionNode;
        e.kids = std::move(kids);
        return e;
    }
};

inline RimTable eval_union_expr(const UnionExpr& X) {
    switch (X.kind) {
        case UnionExpr::WordNode: return eval_word_symbolic(X.word).table;
        case UnionExpr::ConcatNode:
            return compose(eval_union_expr(X.kids[0]), eval_union_expr(X.kids[1]));
        case UnionExpr::UnionNode: {
            std::vector<RimTable> ts;
            for (const auto& k : X.kids) ts.push_back(eval_union_expr(k));
            return unambiguous_union_tables(ts);
        }
    }
    return RimTable{};
}

struct ExprMetrics {
    int length = 0, depth = 0;
};

inline ExprMetrics expr_metrics(const UnionExpr& X) {
    ExprMetrics m;
    switch (X.kind) {
        case UnionExpr::WordNode:
            m.length = (int)X.word.syms.size();
            m.depth = word_depth(X.word);
            break;
        case UnionExpr::ConcatNode: {
            ExprMetrics a = expr_metrics(X.kids[0]), b = expr_metrics(X.kids[1]);
            m.length = a.length + b.length;
            m.depth = a.depth + b.depth;
            break;
        }
        case UnionExpr::UnionNode:
            for (const auto& k : X.kids) {
                ExprMetrics a = expr_metrics(k);
                m.length += a.length;
                m.depth = std::max(m.depth, a.depth);
            }
            break;
    }
    return m;
}

// ---------------------------------------------------------------------------
// sum-of-products synthesis shared by the merge constructions
// ---------------------------------------------------------------------------

namespace detail {

struct SopRow {
    Word x, y; // table row; matches inputs with prefix x, emits y then passthrough
};

struct SopBranch {
    std::vector<SopRow> rows;
    int n = 0; // output length at input length m
};

// Signals produced for the branches at a fixed input length m: per row a
// minterm wire (1 iff the input extends x), and per branch/output position a
// contribution list.  Every input bit is read exactly once per row (as a
// literal up to |x|, as a passed-through payload bit after), so the fork
// budget per input is the total row count plus the constant gadgets.
struct SopSignals {
    CircuitBuilder B;
    int m = 0;
    std::vector<std::vector<int>> minterms;            // per branch, per row
    std::vector<std::vector<std::vector<int>>> terms;  // per branch, per output pos (1-based idx-1)

    std::vector<int> c0_copies, c1_copies; // pre-forked constant wires
    size_t c0_next = 0, c1_next = 0;
    int const0() {
        if (c0_next >= c0_copies.size()) throw circuit_error("sop: constant budget exhausted");
        return c0_copies[c0_next++];
    }
    int const1() {
        if (c1_next >= c1_copies.size()) throw circuit_error("sop: constant budget exhausted");
        return c1_copies[c1_next++];
    }
};

// `const0_uses` / `const1_uses` are the exact numbers of constant wires the
// caller's channel assembly will consume (via SopSignals::const0/const1),
// beyond the constants needed internally for empty minterms.
inline std::unique_ptr<SopSignals> build_sop(const std::vector<SopBranch>& branches, int m,
                                             int const0_uses, int const1_uses) {
    if (m < 1) throw circuit_error("sop: input length must be >= 1");
    auto S = std::make_unique<SopSignals>();
    S->m = m;
    // every row reads every input exactly once: positions up to |x| as
    // minterm literals, the rest as passed-through payload bits
    int total_rows = 0, mu_const1 = 0;
    for (const auto& br : branches)
        for (const auto& r : br.rows) {
            total_rows++;
            if (r.x.empty()) mu_const1++;
        }
    if (total_rows == 0) throw circuit_error("sop: no rows");
    const1_uses += mu_const1;
    std::vector<int> uses(m + 1, total_rows);
    if (const1_uses > 0) uses[1] += 2;
    if (const0_uses > 0) uses[1] += 2;

    std::vector<std::vector<int>> copies(m + 1);
    std::vector<size_t> next(m + 1, 0);
    for (int i = 1; i <= m; ++i) copies[i] = S->B.fork_tree(S->B.input(i), uses[i]);
    auto take = [&](int i) {
        if (next[i] >= copies[i].size()) throw circuit_error("sop: copy budget exhausted");
        return copies[i][next[i]++];
    };
    if (const1_uses > 0) {
        int one = S->B.const_one(take(1), take(1));
        S->c1_copies = S->B.fork_tree(one, const1_uses);
    }
    if (const0_uses > 0) {
        int zero = S->B.const_zero(take(1), take(1));
        S->c0_copies = S->B.fork_tree(zero, const0_uses);
    }

    for (const auto& br : branches) {
        S->minterms.emplace_back();
        S->terms.emplace_back(br.n);
        auto& mt = S->minterms.back();
        auto& tm = S->terms.back();
        for (const auto& r : br.rows) {
            int cr = (int)r.x.size();
            int mu;
            std::vector<int> lits;
            for (int q = 1; q <= cr; ++q) {
                int c = take(q);
                lits.push_back(r.x[q - 1] == '1' ? c : S->B.add(Gate::Not, c));
            }
            if (lits.empty()) mu = S->const1();
            else if (lits.size() == 1) mu = lits[0];
            else mu = S->B.and_tree(lits);
            // fan the minterm out: one copy for the validity channel, one per
            // 1-bit of y, one per payload position
            int payload = m - cr;
            int ones = (int)std::count(r.y.begin(), r.y.end(), '1');
            std::vector<int> mu_copies = S->B.fork_tree(mu, 1 + ones + payload);
            size_t mc = 0;
            mt.push_back(mu_copies[mc++]);
            for (int j = 1; j <= (int)r.y.size(); ++j)
                if (r.y[j - 1] == '1') tm[j - 1].push_back(mu_copies[mc++]);
            for (int p = 1; p <= payload; ++p) {
                int j = (int)r.y.size() + p;
                tm[j - 1].push_back(S->B.add(Gate::And, mu_copies[mc++], take(cr + p)));
            }
        }
    }
    return S;
}

// Whether output position j (1-based) of the branch has any contribution:
// a row either passes a payload bit through (j beyond its image) or copies
// its minterm for an image bit 1.
inline bool position_live(const SopBranch& br, int j) {
    for (const auto& r : br.rows)
        if (j > (int)r.y.size() || r.y[j - 1] == '1') return true;
    return false;
}

// OR together a contribution list (empty -> constant 0; the signals are
// guaranteed at most one high for disjoint branches).
inline int or_terms(SopSignals& S, std::vector<int> xs) {
    if (xs.empty()) return S.const0();
    if (xs.size() == 1) return xs[0];
    return S.B.or_tree(std::move(xs));
}

inline void check_mergeable(const std::vector<RimTable>& ts, bool same_delta) {
    if (ts.empty()) throw domain_error("merge: need at least one branch");
    std::set<int> deltas;
    for (const auto& t : ts) {
        if (t.is_theta()) throw domain_error("merge: theta branch");
        auto d = delta(t);
        if (!d) throw domain_error("merge: branch evaluation is not plep");
        if (same_delta) {
            if (!deltas.empty() && !deltas.count(*d))
                throw domain_error("merge: branches have different length differences");
        } else if (deltas.count(*d)) {
            throw domain_error("merge: repeated length difference");
        }
        deltas.insert(*d);
    }
    // domain disjointness: the generated right ideals are disjoint iff the
    // code words are pairwise prefix-incomparable (equivalent to exhaustive
    // refinement to the common level)
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            for (const auto& [x1, y1] : ts[i].rows)
                for (const auto& [x2, y2] : ts[j].rows)
                    if (prefix_comparable(x1, x2))
                        throw domain_error("merge: branch domains overlap");
}

// Plain union of disjoint branches as one table.
inline RimTable union_of_disjoint(const std::vector<RimTable>& ts) {
    RimTable u{2, {}};
    for (const auto& t : ts)
        for (const auto& [x, y] : t.rows) u.rows[x] = y;
    if (!is_prefix_code(dom_code(u))) throw table_error("merge: union domain is not a prefix code");
    return u;
}

// Core of the equal-length-difference merge: one partial circuit whose
// morphism is the union of the branch tables.  Valid input iff some minterm
// fires; the h0 gadget converts the validity bit into definedness and masks
// every output.
inline Circuit merge_tables_to_circuit(const std::vector<RimTable>& ts, int m) {
    int d = *delta(ts[0]);
    int n = m + d;
    if (n < 1) throw circuit_error("merge: output length must be >= 1 at this input length");
    std::vector<detail::SopBranch> branches;
    for (const auto& t : ts) {
        detail::SopBranch br;
        br.n = n;
        for (const auto& [x, y] : t.rows) br.rows.push_back({x, y});
        branches.push_back(std::move(br));
    }
    int const0_uses = 0;
    for (int j = 1; j <= n; ++j) {
        bool live = false;
        for (const auto& br : branches) live = live || detail::position_live(br, j);
        if (!live) const0_uses++;
    }
    auto S = detail::build_sop(branches, m, const0_uses, 0);
    // validity: OR over every minterm of every branch
    std::vector<int> all;
    for (const auto& mt : S->minterms) all.insert(all.end(), mt.begin(), mt.end());
    int y0 = or_terms(*S, std::move(all));
    int mk = S->B.h0(y0);
    std::vector<int> mks = S->B.fork_tree(mk, n);
    for (int j = 1; j <= n; ++j) {
        std::vector<int> xs;
        for (auto& tm : S->terms) xs.insert(xs.end(), tm[j - 1].begin(), tm[j - 1].end());
        int yj = or_terms(*S, std::move(xs));
        S->B.output(j, S->B.add(Gate::And, mks[j - 1], yj));
    }
    return S->B.take();
}

} // namespace detail

struct MergeResult {
    Circuit circuit;
    GenWord word;
    RimTable table; // union of the branch tables (compact rows)
};

// Merge words with equal length difference and pairwise disjoint domains
// into a single partial circuit and its word.
inline MergeResult merge_same_delta(const std::vector<GenWord>& us) {
    std::vector<RimTable> ts;
    for (const auto& u : us) ts.push_back(eval_word_symbolic(u).table);
    detail::check_mergeable(ts, true);
    int d = *delta(ts[0]);
    int m = std::max(1, 1 - d);
    for (const auto& t : ts) m = std::max(m, maxlen_dom(t));
    MergeResult r;
    r.circuit = detail::merge_tables_to_circuit(ts, m);
    r.word = word_of_circuit(r.circuit);
    r.table = detail::union_of_disjoint(ts);
    return r;
}

// Merge words with pairwise distinct length differences (and disjoint
// domains) into one word over the extended alphabet: a boolean circuit
// computes the padded layout 0^{P_i} 1 d^i, a cascade of zeta-fork stages
// strips the pad (freezing at the marker), and e removes the marker.
inline GenWord merge_mixed_delta(const std::vector<GenWord>& us) {
    std::vector<RimTable> ts;
    for (const auto& u : us) ts.push_back(eval_word_symbolic(u).table);
    detail::check_mergeable(ts, false);
    if (ts.size() == 1) return us[0];
    int m = 1;
    for (const auto& t : ts) m = std::max(m, maxlen_dom(t));
    int n_max = 0;
    std::vector<int> n_i(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) {
        n_i[i] = m + *delta(ts[i]);
        if (n_i[i] < 0) throw circuit_error("merge: negative output length");
        n_max = std::max(n_max, n_i[i]);
    }
    int L = n_max + 2;
    std::vector<int> P(ts.size());
    int N = 0;
    for (size_t i = 0; i < ts.size(); ++i) {
        P[i] = L - n_i[i] - 1;
        N = std::max(N, P[i]);
    }
    std::vector<detail::SopBranch> branches;
    for (size_t i = 0; i < ts.size(); ++i) {
        detail::SopBranch br;
        br.n = n_i[i];
        for (const auto& [x, y] : ts[i].rows) br.rows.push_back({x, y});
        branches.push_back(std::move(br));
    }
    int const0_uses = 0;
    for (int t = 1; t <= L; ++t) {
        bool live = false;
        for (size_t i = 0; i < ts.size() && !live; ++i) {
            if (t == P[i] + 1) live = true;
            else if (t > P[i] + 1 && t <= P[i] + 1 + n_i[i])
                live = detail::position_live(branches[i], t - P[i] - 1);
        }
        if (!live) const0_uses++;
    }
    auto S = detail::build_sop(branches, m, const0_uses, 0);
    // channel t of the layout: branch i's marker at t = P_i + 1, branch i's
    // data bit j at t = P_i + 1 + j; everything else 0
    for (int t = 1; t <= L; ++t) {
        std::vector<int> xs;
        for (size_t i = 0; i < ts.size(); ++i) {
            if (t == P[i] + 1) xs.insert(xs.end(), S->minterms[i].begin(), S->minterms[i].end());
            else if (t > P[i] + 1 && t <= P[i] + 1 + n_i[i]) {
                auto& tm = S->terms[i][t - P[i] - 2];
                xs.insert(xs.end(), tm.begin(), tm.end());
            }
        }
        S->B.output(t, detail::or_terms(*S, std::move(xs)));
    }
    Circuit D = S->B.take();
    GenWord WD = word_of_circuit(D);
    std::vector<GenSym> syms;
    syms.push_back(named_sym("e"));
    for (int t = 0; t < N; ++t) {
        syms.push_back(named_sym("zeta"));
        syms.push_back(named_sym("fork"));
    }
    syms.insert(syms.end(), WD.syms.begin(), WD.syms.end());
    return make_word(std::move(syms), Alphabet::RM);
}

// ---------------------------------------------------------------------------
// tagged word sets and their composition
// ---------------------------------------------------------------------------

struct TaggedEntry {
    GenWord word;
    int dvalue = 0;
    RimTable table; // cached evaluation (compact)
};

struct TaggedWordSet {
    int m = 0;
    std::vector<TaggedEntry> entries; // sorted by dvalue
};

namespace detail {

inline void sort_entries(TaggedWordSet& s) {
    std::sort(s.entries.begin(), s.entries.end(),
              [](const TaggedEntry& a, const TaggedEntry& b) { return a.dvalue < b.dvalue; });
}

// Merge a group of same-delta candidates (already evaluated) into one entry.
inline TaggedEntry merge_candidates(std::vector<TaggedEntry> group) {
    if (group.size() == 1) return group[0];
    std::vector<RimTable> ts;
    for (const auto& g : group) ts.push_back(g.table);
    check_mergeable(ts, true);
    int d = group[0].dvalue;
    int m = std::max(1, 1 - d);
    for (const auto& t : ts) m = std::max(m, maxlen_dom(t));
    Circuit C = merge_tables_to_circuit(ts, m);
    TaggedEntry e;
    e.word = word_of_circuit(C);
    e.dvalue = d;
    e.table = union_of_disjoint(ts);
    return e;
}

} // namespace detail

// V after U: all pairwise compositions, grouped by total length difference,
// same-difference groups re-merged into single circuit words.
inline TaggedWordSet compose_tagged_sets(const TaggedWordSet& U, const TaggedWordSet& V) {
    std::map<int, std::vector<TaggedEntry>> groups;
    int min_du = 0;
    bool first = true;
    for (const auto& u : U.entries) {
        if (first || u.dvalue < min_du) min_du = u.dvalue;
        first = false;
        for (const auto& v : V.entries) {
            RimTable t = compose(v.table, u.table);
            if (t.is_theta()) continue;
            TaggedEntry e;
            std::vector<GenSym> syms = v.word.syms;
            syms.insert(syms.end(), u.word.syms.begin(), u.word.syms.end());
            e.word = make_word(std::move(syms));
            e.dvalue = u.dvalue + v.dvalue;
            e.table = std::move(t);
            groups[e.dvalue].push_back(std::move(e));
        }
    }
    TaggedWordSet out;
    out.m = std::max(U.m, U.entries.empty() ? V.m : V.m - min_du);
    for (auto& [d, g] : groups) out.entries.push_back(detail::merge_candidates(std::move(g)));
    detail::sort_entries(out);
    return out;
}

// ---------------------------------------------------------------------------
// decomposition of a monoid word into an unambiguous union
// ---------------------------------------------------------------------------

// Pieces of f grouped by image length after refining to the domain level.
inline std::vector<RimTable> decompose_table_by_output_length(const RimTable& f) {
    if (f.is_theta()) throw domain_error("decompose_table: theta has no pieces");
    if (f.k != 2) throw alphabet_error("decompose_table: k must be 2");
    RimTable r = refine_to_level(f, maxlen_dom(f));
    std::map<int, RimTable> groups;
    for (const auto& [x, y] : r.rows) {
        auto& g = groups[(int)y.size()];
        g.k = 2;
        g.rows[x] = y;
    }
    std::vector<RimTable> out;
    for (auto& [len, g] : groups) out.push_back(std::move(g));
    return out;
}

namespace detail {

inline const std::map<std::string, std::vector<std::string>>& fragment_map() {
    static const std::map<std::string, std::vector<std::string>> fm = {
        {"a1", {"a1_-1", "a1_0", "a1_1"}},
        {"a2", {"a2_-1", "a2_0", "a2_1"}},
        {"a8", {"a8_0", "a8_1"}},
    };
    return fm;
}

inline void require_monoid_word(const GenWord& w) {
    const auto& names = alphabet_names(Alphabet::M);
    for (const auto& s : w.syms)
        if (!s.tau && !names.count(s.name))
            throw alphabet_error("decompose: word must be over the monoid alphabet");
}

inline int nominal_level(const GenWord& w) {
    int gamma = 0, maxidx = 0;
    for (const auto& s : w.syms) {
        if (s.tau) maxidx = std::max(maxidx, s.j);
        else gamma++;
    }
    return 2 * gamma + maxidx;
}

} // namespace detail

inline TaggedWordSet decompose_word_sequential(const GenWord& w) {
    detail::require_monoid_word(w);
    TaggedWordSet cur;
    cur.m = 0;
    cur.entries.push_back(TaggedEntry{make_word({}), 0, identity_table(2)});
    const auto& frags = detail::fragment_map();
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        auto fit = it->tau ? frags.end() : frags.find(it->name);
        if (fit == frags.end()) {
            // a single-row-per-length generator (or a transposition): prepend
            // to every piece and shift its tag
            RimTable t = sym_table(*it);
            int dshift = it->tau ? 0 : *delta(t);
            TaggedWordSet nxt;
            for (auto& e : cur.entries) {
                RimTable comp = compose(t, e.table);
                if (comp.is_theta()) continue;
                std::vector<GenSym> syms{*it};
                syms.insert(syms.end(), e.word.syms.begin(), e.word.syms.end());
                nxt.entries.push_back(TaggedEntry{make_word(std::move(syms)), e.dvalue + dshift,
                                                  std::move(comp)});
            }
            cur.entries = std::move(nxt.entries);
        } else {
            std::map<int, std::vector<TaggedEntry>> groups;
            for (auto& e : cur.entries) {
                for (const auto& fname : fit->second) {
                    RimTable ft = generator_registry().at(fname);
                    RimTable comp = compose(ft, e.table);
                    if (comp.is_theta()) continue;
                    std::vector<GenSym> syms{named_sym(fname)};
                    syms.insert(syms.end(), e.word.syms.begin(), e.word.syms.end());
                    int d = e.dvalue + *delta(ft);
                    groups[d].push_back(TaggedEntry{make_word(std::move(syms)), d, std::move(comp)});
                }
            }
            cur.entries.clear();
            for (auto& [d, g] : groups)
                cur.entries.push_back(detail::merge_candidates(std::move(g)));
        }
    }
    cur.m = detail::nominal_level(w);
    detail::sort_entries(cur);
    return cur;
}

inline TaggedWordSet decompose_word_parallel(const GenWord& w) {
    detail::require_monoid_word(w);
    const auto& frags = detail::fragment_map();
    // leaves in application order (rightmost text symbol first)
    std::vector<TaggedWordSet> cur;
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        TaggedWordSet leaf;
        auto fit = it->tau ? frags.end() : frags.find(it->name);
        if (fit == frags.end()) {
            RimTable t = sym_table(*it);
            leaf.m = maxlen_dom(t);
            leaf.entries.push_back(
                TaggedEntry{make_word({*it}), it->tau ? 0 : *delta(t), std::move(t)});
        } else {
            leaf.m = 2;
            for (const auto& fname : fit->second) {
                RimTable ft = generator_registry().at(fname);
                leaf.entries.push_back(
                    TaggedEntry{make_word({named_sym(fname)}), *delta(ft), std::move(ft)});
            }
        }
        cur.push_back(std::move(leaf));
    }
    if (cur.empty()) {
        TaggedWordSet id;
        id.m = 0;
        id.entries.push_back(TaggedEntry{make_word({}), 0, identity_table(2)});
        cur.push_back(std::move(id));
    }
    while (cur.size() > 1) {
        if (cur.size() % 2 == 1) { // pad with an identity leaf at the outer end
            TaggedWordSet id;
            id.m = 0;
            id.entries.push_back(TaggedEntry{make_word({}), 0, identity_table(2)});
            cur.push_back(std::move(id));
        }
        std::vector<TaggedWordSet> nxt;
        for (size_t h = 0; h + 1 < cur.size(); h += 2)
            nxt.push_back(compose_tagged_sets(cur[h], cur[h + 1]));
        cur.swap(nxt);
    }
    cur[0].m = detail::nominal_level(w);
    detail::sort_entries(cur[0]);
    return cur[0];
}

} // namespace rim
