#pragma once
// Brute-force oracles and the desk-scale decision problems: exhaustive table
// reconstruction, function emptiness, the length-difference premiss, and the
// non-satisfiability reduction.

#include <optional>
#include <string>

#include "rim/convert.hpp"
#include "rim/genword.hpp"
#include "rim/table.hpp"

namespace rim {

// Exhaustive evaluation on {0,1}^m; the master oracle for every symbolic
// path.  Inputs that stay undecided at length m are simply absent.
inline RimTable brute_force_table(const GenWord& w, int m, int cap = 16) {
    if (m > cap)
        throw resource_error("brute_force_table: m=" + std::to_string(m) + " exceeds cap " +
                             std::to_string(cap));
    RimTable t;
    for (const auto& x : all_words(m)) {
        EvalResult r = eval_word_on_input(w, x);
        if (r.status == EvalStatus::Defined) t.rows[x] = r.value;
    }
    return t;
}

// Safe input length at which definedness of the word is fully decided:
// (longest generator domain word) * (number of generator symbols) + largest
// transposition index.
inline int emptiness_level(const GenWord& w) {
    int maxdom = 0, gamma = 0, maxidx = 0;
    for (const auto& s : w.syms) {
        if (s.tau) {
            maxidx = std::max(maxidx, s.j);
        } else {
            gamma++;
            maxdom = std::max(maxdom, maxlen_dom(generator_registry().at(s.name)));
        }
    }
    return maxdom * gamma + maxidx;
}

inline bool emptiness_check(const GenWord& w, int cap = 16) {
    int m = emptiness_level(w);
    if (m > cap)
        throw resource_error("emptiness_check: required level " + std::to_string(m) +
                             " exceeds cap " + std::to_string(cap));
    for (const auto& x : all_words(m))
        if (eval_word_on_input(w, x).status == EvalStatus::Defined) return false;
    return true;
}

// Length difference of the word's morphism: the symbol-wise sum when the
// function is nonempty, no value otherwise.
inline std::optional<int> delta_compute(const GenWord& w, int cap = 16) {
    int sum = word_delta_sum(w); // requires every generator plep
    if (emptiness_check(w, cap)) return std::nullopt;
    return sum;
}

// Reduction of circuit non-satisfiability to function emptiness: w0 * W(C)
// where w0 keeps exactly the inputs whose (single) output bit is 1.
inline GenWord nonsat_reduce(const Circuit& C) {
    Metrics m = circuit_metrics(C);
    if (m.l_out != 1) throw domain_error("nonsat_reduce: circuit must have exactly one output");
    for (const auto& v : C.v)
        if (v.kind == Gate::Zeta1) throw domain_error("nonsat_reduce: circuit must be boolean");
    GenWord W = word_of_circuit(C);
    std::vector<GenSym> syms{named_sym("zeta1"), named_sym("not"), named_sym("fork")};
    syms.insert(syms.end(), W.syms.begin(), W.syms.end());
    return make_word(std::move(syms));
}

} // namespace rim
