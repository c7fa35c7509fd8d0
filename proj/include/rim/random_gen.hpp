#pragma once
// Seeded random generators for test objects: prefix codes, tables of the
// various classes, circuits, and generator words.  All draws go through a
// single engine so identical seeds give identical objects.

#include <random>
#include <vector>

#include "rim/circuit.hpp"
#include "rim/convert.hpp"
#include "rim/genword.hpp"
#include "rim/table.hpp"

namespace rim {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    int between(int lo, int hi) { // inclusive
        return (int)(eng() % (uint64_t)(hi - lo + 1)) + lo;
    }
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng) < p; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[between(0, (int)v.size() - 1)];
    }
};

inline Word random_word_of_length(Rng& rng, int len, int k = 2) {
    Word w;
    for (int i = 0; i < len; ++i) w += char('0' + rng.between(0, k - 1));
    return w;
}

namespace detail {
inline void random_code_rec(Rng& rng, int k, int depth, double leaf_p, bool maximal,
                            const Word& prefix, std::vector<Word>& out) {
    if (depth == 0 || rng.chance(leaf_p)) {
        out.push_back(prefix);
        return;
    }
    for (int c = 0; c < k; ++c) {
        if (!maximal && rng.chance(0.25)) continue; // prune a subtree: non-maximal code
        random_code_rec(rng, k, depth - 1, leaf_p, maximal, prefix + char('0' + c), out);
    }
}
} // namespace detail

// Random prefix code with words of length <= maxlen; maximal codes never
// prune subtrees.  May return the empty code when maximal is false.
inline std::vector<Word> random_prefix_code(Rng& rng, int maxlen, bool maximal, int k = 2) {
    std::vector<Word> out;
    detail::random_code_rec(rng, k, maxlen, 0.4, maximal, Word(), out);
    if (maximal && out.empty()) out.push_back(Word());
    return out;
}

// Random table: random (possibly non-maximal) domain code with random images.
inline RimTable random_table(Rng& rng, int maxlen, int max_image_len, int k = 2) {
    RimTable t;
    t.k = k;
    for (const auto& x : random_prefix_code(rng, maxlen, false, k))
        t.rows[x] = random_word_of_length(rng, rng.between(0, max_image_len), k);
    return t;
}

inline RimTable random_total_table(Rng& rng, int maxlen, int max_image_len, int k = 2) {
    RimTable t;
    t.k = k;
    for (const auto& x : random_prefix_code(rng, maxlen, true, k))
        t.rows[x] = random_word_of_length(rng, rng.between(0, max_image_len), k);
    return t;
}

inline RimTable random_nonempty_table(Rng& rng, int maxlen, int max_image_len, int k = 2) {
    for (;;) {
        RimTable t = random_table(rng, maxlen, max_image_len, k);
        if (!t.is_theta()) return t;
    }
}

// Normal table: every image is a word of a prefix code Q and every element of
// Q is hit, so the image set generates the image ideal minimally.
inline RimTable random_normal_table(Rng& rng, int maxlen, int k = 2) {
    for (;;) {
        std::vector<Word> P = random_prefix_code(rng, maxlen, false, k);
        std::vector<Word> Q = random_prefix_code(rng, maxlen, false, k);
        if (P.empty() || Q.empty() || Q.size() > P.size()) continue;
        RimTable t;
        t.k = k;
        size_t i = 0;
        for (const auto& x : P) {
            t.rows[x] = i < Q.size() ? Q[i] : rng.pick(Q);
            ++i;
        }
        return t;
    }
}

// Partial fixed-length table: a random subset of {0,1}^m mapped to length-n
// words.  Never empty.
inline RimTable random_pfl_table(Rng& rng, int m, int n) {
    for (;;) {
        RimTable t;
        for (const auto& x : all_words(m))
            if (rng.chance(0.5)) t.rows[x] = random_word_of_length(rng, n);
        if (!t.is_theta()) return t;
    }
}

// Random word over the gate alphabet; transposition indices stay within the
// current plausible width so most symbols actually interact.
inline GenWord random_gate_word(Rng& rng, int length, bool allow_zeta1, int max_index = 5) {
    std::vector<std::string> gates = {"not", "and", "or", "fork"};
    if (allow_zeta1) gates.push_back("zeta1");
    std::vector<GenSym> syms;
    for (int i = 0; i < length; ++i) {
        if (rng.chance(0.3)) {
            int j = rng.between(2, max_index);
            syms.push_back(tau_sym(rng.between(1, j - 1), j));
        } else {
            syms.push_back(named_sym(rng.pick(gates)));
        }
    }
    return make_word(std::move(syms));
}

// Random valid circuit with at most max_vertices vertices, built by
// compiling random gate words (the compiler only produces valid circuits).
inline Circuit random_circuit(Rng& rng, int max_vertices, bool allow_zeta1) {
    for (;;) {
        int len = rng.between(1, std::max(1, max_vertices / 3));
        Circuit C = circuit_of_word(random_gate_word(rng, len, allow_zeta1));
        if ((int)C.v.size() <= max_vertices && !C.v.empty()) return C;
    }
}

// Random word over the monoid generator alphabet.
inline GenWord random_monoid_word(Rng& rng, int length, int max_index = 3) {
    static const std::vector<std::string> names = {"a0", "a1", "a2", "a3", "a4",
                                                   "a5", "a6", "a7", "a8"};
    std::vector<GenSym> syms;
    for (int i = 0; i < length; ++i) {
        if (rng.chance(0.25)) {
            int j = rng.between(2, max_index);
            syms.push_back(tau_sym(rng.between(1, j - 1), j));
        } else {
            syms.push_back(named_sym(rng.pick(names)));
        }
    }
    return make_word(std::move(syms));
}

} // namespace rim
