#pragma once
// Compilers between circuits and generator words over the gate alphabets.
//
// word_of_circuit schedules the gates in vertex order, keeping the current
// wire layout explicit and routing with transpositions so every gate acts on
// the front wires; circuit_of_word replays a word onto a growing wire list,
// creating input vertices lazily as wider prefixes of the input are touched.

#include <algorithm>
#include <string>
#include <vector>

#include "rim/circuit.hpp"
#include "rim/genword.hpp"

namespace rim {

inline GenWord word_of_circuit(const Circuit& C) {
    Diagnostics d = validate(C);
    if (!d.ok) throw circuit_error("word_of_circuit: invalid circuit: " + d.issues.front());
    Metrics met = circuit_metrics(C);
    int m = met.l_in, n = met.l_out;
    int n_in = 0, n_out = 0;
    std::vector<int> out_parent(n + 1, -1);
    for (size_t i = 0; i < C.v.size(); ++i) {
        if (C.v[i].kind == Gate::Input) n_in++;
        if (C.v[i].kind == Gate::Output) { n_out++; out_parent[C.v[i].var] = C.v[i].a; }
    }
    if (n_in != m) throw circuit_error("word_of_circuit: dangling wire (input variables not contiguous)");
    if (n_out != n) throw circuit_error("word_of_circuit: dangling wire (output variables not contiguous)");

    // signal keys: vertex index * 2 + output port (fork emits ports 0 and 1)
    std::vector<long> layout;
    {
        std::vector<int> invert(m + 1, -1);
        for (size_t i = 0; i < C.v.size(); ++i)
            if (C.v[i].kind == Gate::Input) invert[C.v[i].var] = (int)i;
        for (int v = 1; v <= m; ++v) layout.push_back(2L * invert[v]);
    }
    auto find_from = [&](int vertex, int start) {
        for (int p = start; p < (int)layout.size(); ++p)
            if (layout[p] / 2 == vertex) return p;
        throw circuit_error("word_of_circuit: internal routing error");
    };

    std::vector<GenSym> app; // application order (first applied first)
    auto move_to = [&](int target, int p) { // 0-based positions, target < p
        if (p != target) {
            app.push_back(tau_sym(target + 1, p + 1));
            std::swap(layout[target], layout[p]);
        }
    };
    for (size_t gi = 0; gi < C.v.size(); ++gi) {
        const Vertex& g = C.v[gi];
        if (!is_internal_gate(g.kind)) continue;
        move_to(0, find_from(g.a, 0));
        if (gate_in_degree(g.kind) == 2) move_to(1, find_from(g.b, 1));
        const char* nm = gate_name(g.kind);
        app.push_back(named_sym(nm));
        layout.erase(layout.begin(), layout.begin() + gate_in_degree(g.kind));
        if (g.kind == Gate::Fork) {
            layout.insert(layout.begin(), 2L * (long)gi + 1);
            layout.insert(layout.begin(), 2L * (long)gi);
        } else {
            layout.insert(layout.begin(), 2L * (long)gi);
        }
    }
    if ((int)layout.size() != n) throw circuit_error("word_of_circuit: dangling wire");
    for (int t = 1; t <= n; ++t) move_to(t - 1, find_from(out_parent[t], t - 1));
    // width fidelity: replaying the word creates input wires lazily, so a
    // passthrough wire no symbol touches would be lost.  Simulate the replay's
    // input demand and, when it falls short of m, prepend a self-cancelling
    // transposition pair as a width marker.
    {
        int cnt = 0, created = 0;
        for (const auto& s : app) {
            int need = s.tau ? s.j : gate_in_degree(s.name == "not"    ? Gate::Not
                                                    : s.name == "fork" ? Gate::Fork
                                                                       : Gate::And);
            if (cnt < need) { created += need - cnt; cnt = need; }
            if (!s.tau) {
                if (s.name == "fork") cnt += 1;
                else if (s.name != "not") cnt -= 1;
            }
        }
        if (created < m) {
            if (m < 2)
                throw circuit_error("word_of_circuit: untouched single wire is not representable");
            app.insert(app.begin(), {tau_sym(1, m), tau_sym(1, m)});
        }
    }
    std::reverse(app.begin(), app.end());
    return make_word(std::move(app));
}

inline Circuit circuit_of_word(const GenWord& w) {
    if (w.tag != Alphabet::Tfl && w.tag != Alphabet::Pfl)
        throw alphabet_error("circuit_of_word: word must be over the gate alphabet");
    Circuit C;
    std::vector<int> wires; // producing vertex index per wire position
    int next_input = 0;
    auto ensure_width = [&](int j) {
        while ((int)wires.size() < j) {
            C.v.push_back(Vertex{Gate::Input, -1, -1, ++next_input});
            wires.push_back((int)C.v.size() - 1);
        }
    };
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        if (it->tau) {
            ensure_width(it->j);
            std::swap(wires[it->i - 1], wires[it->j - 1]);
            continue;
        }
        Gate g;
        if (it->name == "not") g = Gate::Not;
        else if (it->name == "and") g = Gate::And;
        else if (it->name == "or") g = Gate::Or;
        else if (it->name == "fork") g = Gate::Fork;
        else if (it->name == "zeta1") g = Gate::Zeta1;
        else throw alphabet_error("circuit_of_word: non-gate generator '" + it->name + "'");
        int r = gate_in_degree(g);
        ensure_width(r);
        if (r == 2 && wires[0] == wires[1]) {
            // both operands are ports of one fork; the representation needs
            // distinct parents, so reroute one through a double negation
            C.v.push_back(Vertex{Gate::Not, wires[1], -1, 0});
            C.v.push_back(Vertex{Gate::Not, (int)C.v.size() - 1, -1, 0});
            wires[1] = (int)C.v.size() - 1;
        }
        Vertex x{g, wires[0], r == 2 ? wires[1] : -1, 0};
        C.v.push_back(x);
        int id = (int)C.v.size() - 1;
        wires.erase(wires.begin(), wires.begin() + r);
        if (g == Gate::Fork) wires.insert(wires.begin(), id); // referenced twice below
        wires.insert(wires.begin(), id);
    }
    for (size_t t = 0; t < wires.size(); ++t)
        C.v.push_back(Vertex{Gate::Output, wires[t], -1, (int)t + 1});
    Diagnostics d = validate(C);
    if (!d.ok) throw circuit_error("circuit_of_word: produced invalid circuit: " + d.issues.front());
    return C;
}

inline bool roundtrip_check(const Circuit& C) {
    return is_isomorphic(circuit_of_word(word_of_circuit(C)), C);
}

// Minimal-domain table of the circuit's morphism, obtained by evaluating on
// all inputs of length l_in (inputs with a poisoned zeta1 are omitted).
inline RimTable circuit_table(const Circuit& C, int cap = 20) {
    Metrics m = circuit_metrics(C);
    if (m.l_in > cap) throw resource_error("circuit_table: l_in exceeds cap");
    RimTable t;
    for (const auto& x : all_words(m.l_in)) {
        auto y = eval_circuit(C, x);
        if (y) t.rows[x] = *y;
    }
    return canonicalize(t);
}

} // namespace rim
