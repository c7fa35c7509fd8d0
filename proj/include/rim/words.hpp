#pragma once
// Finite words over {0,...,k-1} and finite prefix codes.
//
// A word is a std::string whose characters are decimal digits; the alphabet
// size k is carried by the containing structure (code, table) rather than by
// each word.  Operations that depend on k take it explicitly and fail loudly
// on out-of-range symbols.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rim/error.hpp"

namespace rim {

using Word = std::string;

inline bool valid_word(const Word& w, int k) {
    for (char c : w)
        if (c < '0' || c >= '0' + k) return false;
    return true;
}

inline void require_word(const Word& w, int k, const char* what) {
    if (k < 2 || k > 10) throw alphabet_error("alphabet size out of range [2,10]");
    if (!valid_word(w, k))
        throw alphabet_error(std::string(what) + ": symbol out of range for k=" + std::to_string(k) +
                             " in '" + w + "'");
}

// a is a prefix of b (not necessarily proper)
inline bool is_prefix(const Word& a, const Word& b) {
    return a.size() <= b.size() && b.compare(0, a.size(), a) == 0;
}

inline bool prefix_comparable(const Word& a, const Word& b) {
    return a.size() <= b.size() ? is_prefix(a, b) : is_prefix(b, a);
}

inline int maxlen(const std::vector<Word>& ws) {
    int m = 0;
    for (const auto& w : ws) m = std::max<int>(m, (int)w.size());
    return m;
}

// ---------------------------------------------------------------------------
// prefix codes
// ---------------------------------------------------------------------------

inline bool is_prefix_code(const std::vector<Word>& words) {
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
            if (words[i] == words[j]) return false;
            if (prefix_comparable(words[i], words[j])) return false;
        }
    return true;
}

namespace detail {

// Recursive tree walk over a set of suffixes (the words below some node).
inline bool maximal_rec(const std::vector<Word>& suf, int k) {
    if (suf.empty()) return false;
    if (suf.size() == 1 && suf[0].empty()) return true;
    for (int c = 0; c < k; ++c) {
        std::vector<Word> sub;
        for (const auto& w : suf)
            if (!w.empty() && w[0] == char('0' + c)) sub.push_back(w.substr(1));
        if (!maximal_rec(sub, k)) return false;
    }
    return true;
}

inline void complement_rec(const std::vector<Word>& suf, int k, const Word& prefix,
                           std::vector<Word>& out) {
    if (suf.empty()) {
        out.push_back(prefix);
        return;
    }
    if (suf.size() == 1 && suf[0].empty()) return; // covered
    for (int c = 0; c < k; ++c) {
        std::vector<Word> sub;
        for (const auto& w : suf)
            if (!w.empty() && w[0] == char('0' + c)) sub.push_back(w.substr(1));
        complement_rec(sub, k, prefix + char('0' + c), out);
    }
}

} // namespace detail

// pre: P is a prefix code over k.  {eps} is maximal; the empty code is not.
inline bool is_maximal_code(const std::vector<Word>& P, int k) {
    for (const auto& w : P) require_word(w, k, "is_maximal_code");
    return detail::maximal_rec(P, k);
}

// Q such that P u Q is maximal, ideals disjoint, maxlen(Q) <= maxlen(P).
// Returns the empty code when P is already maximal.
inline std::vector<Word> complement_code(const std::vector<Word>& P, int k) {
    for (const auto& w : P) require_word(w, k, "complement_code");
    std::vector<Word> out;
    detail::complement_rec(P, k, Word(), out);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::set<Word> strict_prefixes(const std::vector<Word>& P) {
    std::set<Word> out;
    std::set<Word> in(P.begin(), P.end());
    for (const auto& w : P)
        for (size_t l = 0; l < w.size(); ++l) {
            Word p = w.substr(0, l);
            if (!in.count(p)) out.insert(p);
        }
    return out;
}

// C = 0^{n-2}{0,1} u {0^r 1 : 0 <= r <= n-3}, a maximal code of cardinality n.
inline std::vector<Word> standard_code(int n) {
    if (n < 2) throw domain_error("standard_code requires n >= 2");
    std::vector<Word> C;
    Word z(n - 2, '0');
    C.push_back(z + '0');
    C.push_back(z + '1');
    for (int r = 0; r <= n - 3; ++r) C.push_back(Word(r, '0') + '1');
    std::sort(C.begin(), C.end());
    return C;
}

// P over {0,1} -> P u spref(P)*2 over {0,1,2}
inline std::vector<Word> expand_with_sentinel(const std::vector<Word>& P) {
    for (const auto& w : P) require_word(w, 2, "expand_with_sentinel");
    std::vector<Word> out = P;
    for (const auto& p : strict_prefixes(P)) out.push_back(p + '2');
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Word> restrict_code_one_step(const std::vector<Word>& P, const Word& p, int k) {
    if (std::find(P.begin(), P.end(), p) == P.end())
        throw domain_error("restrict_code_one_step: word not in code");
    std::vector<Word> out;
    for (const auto& w : P)
        if (w != p) out.push_back(w);
    for (int c = 0; c < k; ++c) out.push_back(p + char('0' + c));
    std::sort(out.begin(), out.end());
    return out;
}

// Unique minimal code generating the same right ideal (sibling-merge fixpoint).
inline std::vector<Word> canonical_code(std::vector<Word> P, int k) {
    std::set<Word> s(P.begin(), P.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = s.begin(); it != s.end(); ++it) {
            const Word& w = *it;
            if (w.empty() || w.back() != '0') continue;
            Word parent = w.substr(0, w.size() - 1);
            bool all = true;
            for (int c = 0; c < k && all; ++c)
                if (!s.count(parent + char('0' + c))) all = false;
            if (all) {
                for (int c = 0; c < k; ++c) s.erase(parent + char('0' + c));
                s.insert(parent);
                changed = true;
                break;
            }
        }
    }
    return std::vector<Word>(s.begin(), s.end());
}

// Finite-code equivalence: equal ideals up to a finite difference, which for
// finite codes is the same as generating identical ideals (decided on the
// canonical merged forms; equivalent to comparing level-L flattenings).
inline bool codes_equiv_fin(const std::vector<Word>& P, const std::vector<Word>& Q, int k) {
    for (const auto& w : P) require_word(w, k, "codes_equiv_fin");
    for (const auto& w : Q) require_word(w, k, "codes_equiv_fin");
    return canonical_code(P, k) == canonical_code(Q, k);
}

// Flattening of the ideal of P to exactly level L (test oracle for the above).
inline std::vector<Word> flatten_code(const std::vector<Word>& P, int k, int L) {
    std::vector<Word> out;
    for (const auto& p : P) {
        if ((int)p.size() > L) throw domain_error("flatten_code: level below maxlen");
        std::vector<Word> cur{p};
        while ((int)cur.front().size() < L) {
            std::vector<Word> nxt;
            for (const auto& w : cur)
                for (int c = 0; c < k; ++c) nxt.push_back(w + char('0' + c));
            cur.swap(nxt);
        }
        out.insert(out.end(), cur.begin(), cur.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Greedy unique factorization of z over a maximal code C (|C| >= 2, k=2):
// z = c_1 ... c_r rem with rem a strict prefix of some element of C.
inline std::pair<std::vector<Word>, Word> factor_over_maximal_code(const Word& z,
                                                                   const std::vector<Word>& C) {
    if (!is_maximal_code(C, 2) || C.size() < 2)
        throw domain_error("factor_over_maximal_code: code must be maximal with |C| >= 2");
    std::vector<Word> factors;
    size_t pos = 0;
    while (pos < z.size()) {
        bool matched = false;
        for (const auto& c : C) {
            if (!c.empty() && pos + c.size() <= z.size() && z.compare(pos, c.size(), c) == 0) {
                factors.push_back(c);
                pos += c.size();
                matched = true;
                break;
            }
        }
        if (!matched) break;
    }
    return {factors, z.substr(pos)};
}

// eta: [0,k) -> C, applied symbol-wise; injective monoid morphism into {0,1}*.
inline Word higman_encode_word(const Word& x, const std::vector<Word>& eta) {
    int k = (int)eta.size();
    require_word(x, k, "higman_encode_word");
    if (!is_prefix_code(eta) || !is_maximal_code(eta, 2))
        throw domain_error("higman_encode_word: eta must enumerate a maximal prefix code over {0,1}");
    Word out;
    for (char c : x) out += eta[c - '0'];
    return out;
}

// Prefix code of cone(base) minus the ideal generated by `minus` (all over k).
// Used for the symbolic unambiguous union.
namespace detail {
inline void subtract_rec(const Word& prefix, const std::vector<Word>& rel, int k,
                         std::vector<Word>& out) {
    for (const auto& w : rel)
        if (w.empty()) return; // whole cone removed
    if (rel.empty()) {
        out.push_back(prefix);
        return;
    }
    for (int c = 0; c < k; ++c) {
        std::vector<Word> sub;
        for (const auto& w : rel)
            if (w[0] == char('0' + c)) sub.push_back(w.substr(1));
        subtract_rec(prefix + char('0' + c), sub, k, out);
    }
}
} // namespace detail

inline std::vector<Word> subtract_ideal(const Word& base, const std::vector<Word>& minus, int k) {
    std::vector<Word> rel;
    for (const auto& m : minus) {
        if (is_prefix(m, base)) return {}; // base's cone entirely covered
        if (is_prefix(base, m)) rel.push_back(m.substr(base.size()));
    }
    std::vector<Word> out;
    detail::subtract_rec(base, rel, k, out);
    std::sort(out.begin(), out.end());
    return out;
}

// All words of length n over {0,...,k-1}, in lexicographic order.
inline std::vector<Word> all_words(int n, int k = 2) {
    std::vector<Word> cur{Word()};
    for (int i = 0; i < n; ++i) {
        std::vector<Word> nxt;
        for (const auto& w : cur)
            for (int c = 0; c < k; ++c) nxt.push_back(w + char('0' + c));
        cur.swap(nxt);
    }
    return cur;
}

} // namespace rim
