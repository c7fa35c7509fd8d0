#pragma once
// Finite-table right-ideal morphisms of A*: evaluation, composition,
// canonical representatives of the finite-difference congruence,
// classification predicates, delta, regular inverses, and the constructive
// injective-normal / normal-chain factorizations.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rim/words.hpp"

namespace rim {

struct RimTable {
    int k = 2;
    std::map<Word, Word> rows; // domain code -> image words; empty map = theta

    bool operator==(const RimTable& o) const { return k == o.k && rows == o.rows; }
    bool is_theta() const { return rows.empty(); }
};

inline std::vector<Word> dom_code(const RimTable& f) {
    std::vector<Word> out;
    out.reserve(f.rows.size());
    for (const auto& [x, y] : f.rows) out.push_back(x);
    return out;
}

inline std::vector<Word> image_words(const RimTable& f) {
    std::set<Word> s;
    for (const auto& [x, y] : f.rows) s.insert(y);
    return std::vector<Word>(s.begin(), s.end());
}

// imC(f): prefix code generating the right ideal of the images, i.e. the
// prefix-minimal elements of f(domC(f)).  Can be strictly smaller than the
// image set for non-normal f.
inline std::vector<Word> image_code(const RimTable& f) {
    std::vector<Word> imgs = image_words(f);
    std::vector<Word> out;
    for (const auto& y : imgs) {
        bool minimal = true;
        for (const auto& z : imgs)
            if (z != y && is_prefix(z, y)) { minimal = false; break; }
        if (minimal) out.push_back(y);
    }
    return out;
}

inline int maxlen_dom(const RimTable& f) { return maxlen(dom_code(f)); }

inline RimTable make_rim(const std::map<Word, Word>& rows, int k) {
    RimTable f{k, rows};
    std::vector<Word> dom;
    for (const auto& [x, y] : rows) {
        require_word(x, k, "make_rim domain");
        require_word(y, k, "make_rim image");
        dom.push_back(x);
    }
    if (!is_prefix_code(dom)) throw table_error("domain is not a prefix code");
    return f;
}

inline RimTable identity_table(int k = 2) { return RimTable{k, {{Word(), Word()}}}; }

inline std::optional<Word> apply(const RimTable& f, const Word& x) {
    for (const auto& [p, y] : f.rows)
        if (is_prefix(p, x)) return y + x.substr(p.size());
    return std::nullopt;
}

namespace detail {
inline Word strip_trailing_zeros(Word w) {
    while (!w.empty() && w.back() == '0') w.pop_back();
    return w;
}
} // namespace detail

// Action on x*0^w: result of applying f to x 0^omega, as the shortest word y
// with f(x 0^i) = y 0^j (trailing zeros stripped); nullopt iff x 0^omega lies
// outside Dom(f) A^omega.
inline std::optional<Word> apply_rational(const RimTable& f, const Word& x) {
    for (const auto& [p, y] : f.rows) {
        if (is_prefix(p, x)) return detail::strip_trailing_zeros(y + x.substr(p.size()));
        if (is_prefix(x, p)) {
            Word tail = p.substr(x.size());
            if (tail.find_first_not_of('0') == Word::npos)
                return detail::strip_trailing_zeros(y);
        }
    }
    return std::nullopt;
}

// Minimal-domain table of g o f: each row of f is kept when its image already
// reaches a domain word of g, and split/extended when its image is a strict
// prefix of domain words of g; rows whose image leaves Dom(g) entirely vanish.
inline RimTable compose(const RimTable& g, const RimTable& f) {
    if (g.k != f.k) throw alphabet_error("compose: alphabet mismatch");
    RimTable out{f.k, {}};
    for (const auto& [x, y] : f.rows) {
        bool matched = false;
        for (const auto& [q, gq] : g.rows) {
            if (is_prefix(q, y)) {
                out.rows[x] = gq + y.substr(q.size());
                matched = true;
                break;
            }
        }
        if (matched) continue;
        for (const auto& [d, gd] : g.rows)
            if (is_prefix(y, d) && y != d) out.rows[x + d.substr(y.size())] = gd;
    }
    return out;
}

inline RimTable refine_to_level(const RimTable& f, int m) {
    RimTable out{f.k, {}};
    for (const auto& [x, y] : f.rows) {
        if ((int)x.size() > m) throw domain_error("refine_to_level: m below maxlen(domC)");
        for (const auto& u : all_words(m - (int)x.size(), f.k)) out.rows[x + u] = y + u;
    }
    return out;
}

// Maximal sibling merge; the unique minimal representative of the
// finite-difference class of f.
inline RimTable canonicalize(const RimTable& f) {
    std::map<Word, Word> rows = f.rows;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [x, y] : rows) {
            if (x.empty() || y.empty()) continue;
            if (x.back() != y.back()) continue;
            Word px = x.substr(0, x.size() - 1);
            Word py = y.substr(0, y.size() - 1);
            bool all = true;
            for (int c = 0; c < f.k && all; ++c) {
                auto it = rows.find(px + char('0' + c));
                if (it == rows.end() || it->second != py + char('0' + c)) all = false;
            }
            if (all) {
                for (int c = 0; c < f.k; ++c) rows.erase(px + char('0' + c));
                rows[px] = py;
                changed = true;
                break;
            }
        }
    }
    return RimTable{f.k, rows};
}

inline bool equiv_fin(const RimTable& f, const RimTable& g) {
    if (f.k != g.k) throw alphabet_error("equiv_fin: alphabet mismatch");
    return canonicalize(f).rows == canonicalize(g).rows;
}

// Decision by refinement to the common level (the definition); kept as a test
// oracle for the canonical-form method.  Only usable at desk scale.
inline bool equiv_fin_refine(const RimTable& f, const RimTable& g) {
    if (f.k != g.k) throw alphabet_error("equiv_fin: alphabet mismatch");
    int L = std::max(maxlen_dom(f), maxlen_dom(g));
    if (!codes_equiv_fin(dom_code(f), dom_code(g), f.k)) return false;
    return refine_to_level(f, L).rows == refine_to_level(g, L).rows;
}

inline std::set<int> delta_set(const RimTable& f) {
    std::set<int> out;
    for (const auto& [x, y] : f.rows) out.insert((int)y.size() - (int)x.size());
    return out;
}

struct Classification {
    bool total = false, injective = false, surjective = false, normal = false;
    bool plep = false, pfl = false, tfl = false, idempotent = false;
};

inline std::optional<int> delta(const RimTable& f) {
    auto ds = delta_set(f);
    if (ds.size() != 1) return std::nullopt; // theta or non-plep
    return *ds.begin();
}

inline Classification classify(const RimTable& f) {
    Classification c;
    c.total = is_maximal_code(dom_code(f), f.k);
    c.surjective = is_maximal_code(image_code(f), f.k);
    RimTable can = canonicalize(f);
    {
        std::vector<Word> imgs;
        for (const auto& [x, y] : can.rows) imgs.push_back(y);
        c.injective = is_prefix_code(imgs);
        if (f.is_theta()) c.injective = true;
    }
    c.normal = image_words(f) == image_code(f);
    c.plep = delta_set(f).size() <= 1;
    {
        std::set<size_t> domlens;
        for (const auto& [x, y] : f.rows) domlens.insert(x.size());
        c.pfl = c.plep && domlens.size() <= 1;
        c.tfl = c.pfl && c.total;
    }
    c.idempotent = equiv_fin(compose(f, f), f);
    return c;
}

// f' with domC(f') = imC(f) and f'(y) the lexicographically least exact
// preimage of y; satisfies f f' f = f up to the finite-difference congruence.
inline RimTable regular_inverse(const RimTable& f) {
    RimTable out{f.k, {}};
    if (f.is_theta()) return out;
    for (const auto& q : image_code(f)) {
        Word best;
        bool found = false;
        for (const auto& [x, y] : f.rows)
            if (y == q && (!found || x < best)) { best = x; found = true; }
        // q in imC(f) is prefix-minimal among images, so an exact preimage exists
        out.rows[q] = best;
    }
    return out;
}

// f = nu o j with j injective (j(p) = p u_p) and nu normal (nu(p) = q_p),
// where f(p) = q_p u_p and q_p in imC(f).  Returns (nu, j).
inline std::pair<RimTable, RimTable> injective_normal_factorization(const RimTable& f) {
    RimTable nu{f.k, {}}, j{f.k, {}};
    std::vector<Word> imc = image_code(f);
    for (const auto& [p, y] : f.rows) {
        const Word* q = nullptr;
        for (const auto& c : imc)
            if (is_prefix(c, y)) { q = &c; break; }
        // every image extends some element of imC
        Word u = y.substr(q->size());
        j.rows[p] = p + u;
        nu.rows[p] = *q; // the remainder u passes through nu as a suffix
    }
    return {nu, j};
}

// Lemma-style chain: a normal f with |P| - |Q| = d >= 1 factors into at most
// d normal tables, each with |domC| - |imC| <= 1.
inline std::vector<RimTable> normal_chain_decomposition(const RimTable& f) {
    if (image_words(f) != image_code(f)) throw domain_error("normal_chain: f must be normal");
    int d = (int)f.rows.size() - (int)image_code(f).size();
    if (d <= 1) return {f};
    // find a collision pair x1 != x2 with f(x1) = f(x2)
    Word x1, x2;
    bool found = false;
    for (auto it = f.rows.begin(); it != f.rows.end() && !found; ++it)
        for (auto jt = std::next(it); jt != f.rows.end() && !found; ++jt)
            if (it->second == jt->second) { x1 = it->first; x2 = jt->first; found = true; }
    // psi1 merges x1 into x2 over P; psi2 is f on P minus {x1}
    RimTable psi1{f.k, {}}, psi2{f.k, {}};
    for (const auto& [x, y] : f.rows) {
        psi1.rows[x] = (x == x1) ? x2 : x;
        if (x != x1) psi2.rows[x] = y;
    }
    std::vector<RimTable> rest = normal_chain_decomposition(psi2);
    rest.push_back(psi1); // rightmost factor applied first; list is outermost-first
    return rest;
}

// Unambiguous union: keep exactly the points lying in exactly one Dom(f_i).
// Computed symbolically by cone subtraction; when the domain ideals are
// pairwise disjoint this is the plain union of the tables.
inline RimTable unambiguous_union_tables(const std::vector<RimTable>& fs) {
    if (fs.empty()) return RimTable{2, {}};
    int k = fs[0].k;
    for (const auto& f : fs)
        if (f.k != k) throw alphabet_error("unambiguous_union_tables: alphabet mismatch");
    RimTable out{k, {}};
    for (size_t i = 0; i < fs.size(); ++i) {
        std::vector<Word> others;
        for (size_t j = 0; j < fs.size(); ++j)
            if (j != i)
                for (const auto& [x, y] : fs[j].rows) others.push_back(x);
        for (const auto& [x, y] : fs[i].rows)
            for (const auto& r : subtract_ideal(x, others, k))
                out.rows[r] = y + r.substr(x.size());
    }
    if (!is_prefix_code(dom_code(out)))
        throw table_error("unambiguous_union_tables: result domain not a prefix code");
    return out;
}

// Transport of a k-letter morphism to {0,1}* through eta: [0,k) -> C.
inline RimTable higman_transport(const RimTable& f, const std::vector<Word>& eta) {
    if ((int)eta.size() != f.k) throw domain_error("higman_transport: |eta| != k");
    RimTable out{2, {}};
    for (const auto& [x, y] : f.rows)
        out.rows[higman_encode_word(x, eta)] = higman_encode_word(y, eta);
    return out;
}

} // namespace rim
