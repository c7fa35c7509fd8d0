#pragma once
// Acyclic boolean/partial circuits as a DAG IR.
//
// Gate arities: Input 0/1, Output 1/0, Not 1/1, And 2/1, Or 2/1, Fork 1/2,
// Zeta1 2/1.  All fan-out goes through Fork gates; every non-Output vertex is
// consumed exactly once (twice for Fork).  Vertices are stored in topological
// order (parents before children).  Wire permutations live only in the
// adjacency; there are no permutation vertices.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "rim/table.hpp"
#include "rim/words.hpp"

namespace rim {

enum class Gate { Input, Output, And, Or, Not, Fork, Zeta1 };

inline const char* gate_name(Gate g) {
    switch (g) {
        case Gate::Input: return "input";
        case Gate::Output: return "output";
        case Gate::And: return "and";
        case Gate::Or: return "or";
        case Gate::Not: return "not";
        case Gate::Fork: return "fork";
        case Gate::Zeta1: return "zeta1";
    }
    return "?";
}

inline int gate_in_degree(Gate g) {
    switch (g) {
        case Gate::Input: return 0;
        case Gate::Output: case Gate::Not: case Gate::Fork: return 1;
        default: return 2;
    }
}

inline int gate_out_degree(Gate g) {
    switch (g) {
        case Gate::Output: return 0;
        case Gate::Fork: return 2;
        default: return 1;
    }
}

inline bool is_internal_gate(Gate g) { return g != Gate::Input && g != Gate::Output; }

struct Vertex {
    Gate kind;
    int a = -1, b = -1; // parents (left, right); b unused for in-degree <= 1
    int var = 0;        // input/output position (1-based) for Input/Output
};

struct Circuit {
    std::vector<Vertex> v;
};

struct Diagnostics {
    bool ok = true;
    std::vector<std::string> issues;
    void fail(int vid, const std::string& msg) {
        ok = false;
        issues.push_back("v" + std::to_string(vid) + ": " + msg);
    }
};

inline Diagnostics validate(const Circuit& C) {
    Diagnostics d;
    int n = (int)C.v.size();
    std::vector<int> refs(n, 0);
    std::set<int> invars, outvars;
    for (int i = 0; i < n; ++i) {
        const Vertex& x = C.v[i];
        int indeg = gate_in_degree(x.kind);
        if (indeg >= 1) {
            if (x.a < 0 || x.a >= n) { d.fail(i, "missing/invalid left parent"); continue; }
            if (x.a >= i) d.fail(i, "left parent not earlier in topological order");
            if (C.v[x.a].kind == Gate::Output) d.fail(i, "output vertex used as a parent");
            refs[x.a]++;
        } else if (x.a != -1) {
            d.fail(i, "input vertex must have no parents");
        }
        if (indeg == 2) {
            if (x.b < 0 || x.b >= n) { d.fail(i, "missing/invalid right parent"); continue; }
            if (x.b >= i) d.fail(i, "right parent not earlier in topological order");
            if (x.b == x.a) d.fail(i, "left and right parents must differ");
            if (C.v[x.b].kind == Gate::Output) d.fail(i, "output vertex used as a parent");
            refs[x.b]++;
        } else if (x.b != -1) {
            d.fail(i, "unexpected right parent");
        }
        if (x.kind == Gate::Input) {
            if (x.var < 1) d.fail(i, "input variable index must be >= 1");
            if (!invars.insert(x.var).second) d.fail(i, "duplicate input variable");
        }
        if (x.kind == Gate::Output) {
            if (x.var < 1) d.fail(i, "output variable index must be >= 1");
            if (!outvars.insert(x.var).second) d.fail(i, "duplicate output variable");
        }
    }
    for (int i = 0; i < n; ++i) {
        int want = gate_out_degree(C.v[i].kind);
        if (refs[i] != want)
            d.fail(i, "out-degree " + std::to_string(refs[i]) + ", expected " + std::to_string(want));
    }
    return d;
}

struct Metrics {
    int l_in = 0, l_out = 0, size = 0, depth = 0;
};

inline Metrics circuit_metrics(const Circuit& C) {
    Metrics m;
    int gates = 0;
    std::vector<int> depth(C.v.size(), 0);
    for (size_t i = 0; i < C.v.size(); ++i) {
        const Vertex& x = C.v[i];
        if (x.kind == Gate::Input) m.l_in = std::max(m.l_in, x.var);
        if (x.kind == Gate::Output) m.l_out = std::max(m.l_out, x.var);
        if (is_internal_gate(x.kind)) gates++;
        int p = 0;
        if (x.a >= 0) p = std::max(p, depth[x.a]);
        if (x.b >= 0) p = std::max(p, depth[x.b]);
        depth[i] = p + (is_internal_gate(x.kind) ? 1 : 0);
        m.depth = std::max(m.depth, depth[i]);
    }
    m.size = std::max({m.l_in, m.l_out, gates});
    return m;
}

// Forward evaluation.  Any Zeta1 whose first input is 1 makes the whole
// output undefined.  Surplus input bits beyond l_in pass through as identity
// wires appended after the last output.
inline std::optional<Word> eval_circuit(const Circuit& C, const Word& x) {
    Metrics m = circuit_metrics(C);
    if ((int)x.size() < m.l_in) throw domain_error("eval_circuit: input shorter than l_in");
    std::vector<char> val(C.v.size(), '?');
    bool poisoned = false;
    for (size_t i = 0; i < C.v.size() && !poisoned; ++i) {
        const Vertex& g = C.v[i];
        switch (g.kind) {
            case Gate::Input: val[i] = x[g.var - 1]; break;
            case Gate::Output: val[i] = val[g.a]; break;
            case Gate::Not: val[i] = (val[g.a] == '0') ? '1' : '0'; break;
            case Gate::Fork: val[i] = val[g.a]; break;
            case Gate::And: val[i] = (val[g.a] == '1' && val[g.b] == '1') ? '1' : '0'; break;
            case Gate::Or: val[i] = (val[g.a] == '1' || val[g.b] == '1') ? '1' : '0'; break;
            case Gate::Zeta1:
                if (val[g.a] == '1') poisoned = true;
                val[i] = val[g.b];
                break;
        }
    }
    if (poisoned) return std::nullopt;
    Word out(m.l_out, '?');
    for (size_t i = 0; i < C.v.size(); ++i)
        if (C.v[i].kind == Gate::Output) out[C.v[i].var - 1] = val[i];
    if (out.find('?') != Word::npos) throw circuit_error("eval_circuit: missing output variable");
    out += x.substr(m.l_in); // identity wires
    return out;
}

// ---------------------------------------------------------------------------
// precedence encoding
// ---------------------------------------------------------------------------

namespace detail {

inline int gate_rank(Gate g) {
    // inputs first, then internal gates, then outputs; this keeps input and
    // output vertices in variable order in the canonical numbering so the
    // codec round-trips variable labels exactly.
    switch (g) {
        case Gate::Input: return 0;
        case Gate::Output: return 2;
        default: return 1;
    }
}

inline Word to_bin(int x, int w) {
    Word s(w, '0');
    for (int i = w - 1; i >= 0; --i, x >>= 1) s[i] = char('0' + (x & 1));
    return s;
}

inline const char* gate_code(Gate g) {
    switch (g) {
        case Gate::Input: return "000";
        case Gate::Output: return "001";
        case Gate::And: return "010";
        case Gate::Or: return "011";
        case Gate::Not: return "100";
        case Gate::Fork: return "101";
        case Gate::Zeta1: return "110";
    }
    return "";
}

inline int bit_width(int n) { // width of 1..n with no all-zero string
    int w = 1;
    while ((1 << w) < n + 1) ++w;
    return w;
}

} // namespace detail

// Canonical topological numbering: Kahn's algorithm, preferring (rank, var,
// original index); numbers are 1..|V|.
inline std::vector<int> canonical_topo_numbers(const Circuit& C) {
    int n = (int)C.v.size();
    std::vector<int> indeg(n, 0), children_count(n, 0);
    std::vector<std::vector<int>> kids(n);
    for (int i = 0; i < n; ++i) {
        if (C.v[i].a >= 0) { indeg[i]++; kids[C.v[i].a].push_back(i); }
        if (C.v[i].b >= 0) { indeg[i]++; kids[C.v[i].b].push_back(i); }
    }
    using Key = std::tuple<int, int, int>;
    std::set<Key> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.insert({detail::gate_rank(C.v[i].kind), C.v[i].var, i});
    std::vector<int> number(n, 0);
    int next = 1;
    while (!ready.empty()) {
        auto [rk, var, i] = *ready.begin();
        ready.erase(ready.begin());
        number[i] = next++;
        for (int c : kids[i])
            if (--indeg[c] == 0) ready.insert({detail::gate_rank(C.v[c].kind), C.v[c].var, c});
    }
    return number;
}

// Bit-exact serialization: per-vertex records #v#b#l#r# (sources have
// v = l = r, in-degree-1 vertices have r = l), concatenated in ascending
// vertex order, followed by ##, the whole string mapped through
// code0(0)=00, code0(1)=01, code0(#)=1.
inline Word encode_precedence(const Circuit& C) {
    Diagnostics d = validate(C);
    if (!d.ok) throw circuit_error("encode_precedence: invalid circuit: " + d.issues.front());
    int n = (int)C.v.size();
    if (n == 0) throw circuit_error("encode_precedence: empty circuit");
    std::vector<int> num = canonical_topo_numbers(C);
    std::vector<int> order(n); // order[t] = original index of vertex numbered t+1
    for (int i = 0; i < n; ++i) order[num[i] - 1] = i;
    int w = detail::bit_width(n);
    std::string s;
    for (int t = 0; t < n; ++t) {
        const Vertex& x = C.v[order[t]];
        int v = t + 1;
        int l, r;
        if (x.kind == Gate::Input) { l = r = v; }
        else if (gate_in_degree(x.kind) == 1) { l = r = num[x.a]; }
        else { l = num[x.a]; r = num[x.b]; }
        s += '#';
        s += detail::to_bin(v, w);
        s += '#';
        s += detail::gate_code(x.kind);
        s += '#';
        s += detail::to_bin(l, w);
        s += '#';
        s += detail::to_bin(r, w);
        s += '#';
    }
    s += "##";
    Word bits;
    for (char c : s) {
        if (c == '#') bits += '1';
        else if (c == '0') bits += "00";
        else bits += "01";
    }
    return bits;
}

// Decoder; throws circuit_error mentioning the first failed step.
inline Circuit decode_precedence(const Word& bits) {
    // step 1: code0 decoding and record shape
    std::string s;
    for (size_t i = 0; i < bits.size();) {
        if (bits[i] == '1') { s += '#'; ++i; }
        else {
            if (i + 1 >= bits.size()) throw circuit_error("step 1: dangling bit");
            s += (bits[i + 1] == '0') ? '0' : '1';
            i += 2;
        }
    }
    struct Rec { std::string v, b, l, r; };
    std::vector<Rec> recs;
    size_t i = 0;
    auto field = [&](bool gatef) {
        std::string f;
        while (i < s.size() && s[i] != '#') f += s[i++];
        if (i >= s.size() || f.empty()) throw circuit_error("step 1: malformed record");
        ++i; // consume '#'
        if (gatef && f.size() != 3) throw circuit_error("step 1: malformed gate code");
        return f;
    };
    bool terminated = false;
    while (i < s.size()) {
        if (s[i] != '#') throw circuit_error("step 1: expected '#'");
        if (i + 1 < s.size() && s[i + 1] == '#') {
            if (i + 2 != s.size()) throw circuit_error("step 1: content after terminator");
            terminated = true;
            break;
        }
        ++i;
        Rec rec;
        rec.v = field(false);
        rec.b = field(true);
        rec.l = field(false);
        rec.r = field(false);
        recs.push_back(rec);
    }
    if (!terminated || recs.empty()) throw circuit_error("step 1: missing records or terminator");

    // step 2: widths, numbering 1..N in order, parents strictly before children
    int n = (int)recs.size();
    int w = (int)recs[0].v.size();
    if (w != detail::bit_width(n)) throw circuit_error("step 2: wrong vertex-string width");
    auto val = [&](const std::string& f) {
        int x = 0;
        for (char c : f) x = (x << 1) | (c == '1' ? 1 : 0);
        return x;
    };
    std::map<std::string, Gate> gate_of = {
        {"000", Gate::Input}, {"001", Gate::Output}, {"010", Gate::And}, {"011", Gate::Or},
        {"100", Gate::Not},  {"101", Gate::Fork},  {"110", Gate::Zeta1}};
    Circuit C;
    for (int t = 0; t < n; ++t) {
        const Rec& rec = recs[t];
        if ((int)rec.v.size() != w || (int)rec.l.size() != w || (int)rec.r.size() != w)
            throw circuit_error("step 2: inconsistent vertex-string width");
        if (val(rec.v) != t + 1) throw circuit_error("step 2: vertices not numbered 1..|V| in order");
        auto git = gate_of.find(rec.b);
        if (git == gate_of.end()) throw circuit_error("step 1: unknown gate code");
        Gate g = git->second;
        int v = t + 1, l = val(rec.l), r = val(rec.r);
        Vertex x{g, -1, -1, 0};
        if (g == Gate::Input) {
            if (l != v || r != v) throw circuit_error("step 3: input vertex must have l = r = v");
        } else if (gate_in_degree(g) == 1) {
            if (l != r) throw circuit_error("step 3: in-degree-1 vertex must have r = l");
            if (!(l < v)) throw circuit_error("step 2: parent not lexicographically before vertex");
            x.a = l - 1;
        } else {
            if (l == r || l == v || r == v) throw circuit_error("step 3: l, r, v must all differ");
            if (!(l < v && r < v)) throw circuit_error("step 2: parent not lexicographically before vertex");
            x.a = l - 1;
            x.b = r - 1;
        }
        C.v.push_back(x);
    }
    // variable labels: inputs and outputs in vertex order
    int iv = 1, ov = 1;
    for (auto& x : C.v) {
        if (x.kind == Gate::Input) x.var = iv++;
        if (x.kind == Gate::Output) x.var = ov++;
    }
    // step 4: degree checks via the shared validator
    Diagnostics d = validate(C);
    if (!d.ok) throw circuit_error("step 4: " + d.issues.front());
    return C;
}

// Exact isomorphism respecting gate labels, input/output variable labels and
// (for in-degree-2 gates) port order.  Because every vertex's parents are
// determined and ports are ordered, matching outputs by variable label forces
// the whole map; we propagate and check consistency.
inline bool is_isomorphic(const Circuit& C1, const Circuit& C2) {
    if (C1.v.size() != C2.v.size()) return false;
    std::map<int, int> out1, out2, in1, in2;
    for (size_t i = 0; i < C1.v.size(); ++i) {
        if (C1.v[i].kind == Gate::Output) out1[C1.v[i].var] = (int)i;
        if (C1.v[i].kind == Gate::Input) in1[C1.v[i].var] = (int)i;
    }
    for (size_t i = 0; i < C2.v.size(); ++i) {
        if (C2.v[i].kind == Gate::Output) out2[C2.v[i].var] = (int)i;
        if (C2.v[i].kind == Gate::Input) in2[C2.v[i].var] = (int)i;
    }
    auto keys = [](const std::map<int, int>& m) {
        std::vector<int> ks;
        for (auto& [k, v] : m) ks.push_back(k);
        return ks;
    };
    if (keys(out1) != keys(out2) || keys(in1) != keys(in2)) return false;
    std::map<int, int> fwd, bwd;
    std::vector<std::pair<int, int>> stack;
    auto bind = [&](int a, int b) {
        auto it = fwd.find(a);
        if (it != fwd.end()) return it->second == b;
        auto jt = bwd.find(b);
        if (jt != bwd.end()) return false;
        fwd[a] = b;
        bwd[b] = a;
        stack.push_back({a, b});
        return true;
    };
    for (auto& [var, i] : out1)
        if (!bind(i, out2[var])) return false;
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        const Vertex& x = C1.v[a];
        const Vertex& y = C2.v[b];
        if (x.kind != y.kind || x.var != y.var) return false;
        if (x.a >= 0 && !bind(x.a, y.a)) return false;
        if (x.b >= 0 && !bind(x.b, y.b)) return false;
    }
    return fwd.size() == C1.v.size();
}

// ---------------------------------------------------------------------------
// gate tables (positioned gates as right-ideal morphisms over {0,1})
// ---------------------------------------------------------------------------

inline RimTable tau_table(int i, int j) {
    if (!(1 <= i && i < j)) throw domain_error("tau requires 1 <= i < j");
    RimTable t;
    for (auto& w : all_words(j)) {
        Word y = w;
        std::swap(y[i - 1], y[j - 1]);
        t.rows[w] = y;
    }
    return t;
}

// kappa_{1,n} = tau_{n-1,n} o ... o tau_{1,2}: moves wire 1 to position n.
inline RimTable kappa_table(int n) {
    if (n < 1) throw domain_error("kappa requires n >= 1");
    RimTable t;
    for (auto& w : all_words(n)) t.rows[w] = w.substr(1) + w[0];
    return t;
}

// zeta_m: (0 b_1)(0 b_2)...(0 b_m) -> b_1 ... b_m; undefined elsewhere.
inline RimTable zeta_m_table(int m) {
    RimTable t;
    for (auto& b : all_words(m)) {
        Word x;
        for (char c : b) { x += '0'; x += c; }
        t.rows[x] = b;
    }
    return t;
}

// The right-ideal morphism of a gate positioned at wire j (acting on wires
// j, j+1 for the binary gates and Zeta1).
inline RimTable gate_table(Gate kind, int j) {
    if (j < 1) throw domain_error("gate position must be >= 1");
    RimTable t;
    switch (kind) {
        case Gate::Not:
            for (auto& w : all_words(j)) {
                Word y = w;
                y[j - 1] = (y[j - 1] == '0') ? '1' : '0';
                t.rows[w] = y;
            }
            break;
        case Gate::Fork:
            for (auto& w : all_words(j)) t.rows[w] = w + w[j - 1];
            break;
        case Gate::And:
        case Gate::Or:
            for (auto& w : all_words(j + 1)) {
                bool p = w[j - 1] == '1', q = w[j] == '1';
                bool r = (kind == Gate::And) ? (p && q) : (p || q);
                t.rows[w] = w.substr(0, j - 1) + char('0' + r);
            }
            break;
        case Gate::Zeta1:
            for (auto& w : all_words(j + 1))
                if (w[j - 1] == '0') t.rows[w] = w.substr(0, j - 1) + w[j];
            break;
        default:
            throw domain_error("gate_table: not an internal gate");
    }
    return t;
}

} // namespace rim
