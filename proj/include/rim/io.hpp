#pragma once
// Text formats for the CLI and the golden tests:
//  - prefix codes: one word per line, `eps` for the empty word, '#' comments
//  - tables: `# k=<n>` header then `x -> y` rows
//  - generator words: whitespace-separated tokens
//  - circuits: netlist lines `v<i>: <gate> [parents]`, input/output variables
//    implicit in listing order
//  - tagged word sets: `m=<m>` header then `delta=<d> : <tokens>` lines
//  - bit strings: raw 01 text, or `<nbits>:<hex>`

#include <sstream>
#include <string>
#include <vector>

#include "rim/circuit.hpp"
#include "rim/genword.hpp"
#include "rim/table.hpp"
#include "rim/unambiguous.hpp"

namespace rim {

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        line = trim(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

inline std::vector<std::string> tokens_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline Word parse_code_word(const std::string& tok) { return tok == "eps" ? Word() : tok; }
inline std::string show_word(const Word& w) { return w.empty() ? "eps" : w; }

} // namespace detail

// ---------------------------------------------------------------------------
// prefix codes
// ---------------------------------------------------------------------------

inline std::string format_code(const std::vector<Word>& P) {
    std::string out;
    for (const auto& w : P) out += detail::show_word(w) + "\n";
    return out;
}

inline std::vector<Word> parse_code(const std::string& text, int k = 2) {
    std::vector<Word> out;
    for (const auto& line : detail::lines_of(text)) {
        Word w = detail::parse_code_word(line);
        require_word(w, k, "parse_code");
        out.push_back(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

inline std::string format_table(const RimTable& f) {
    std::string out = "# k=" + std::to_string(f.k) + "\n";
    for (const auto& [x, y] : f.rows)
        out += detail::show_word(x) + " -> " + detail::show_word(y) + "\n";
    return out;
}

inline RimTable parse_table(const std::string& text) {
    int k = 2;
    { // the k header is a comment line, scan before stripping comments
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            size_t p = line.find("k=");
            if (line.find('#') != std::string::npos && p != std::string::npos) {
                try {
                    k = std::stoi(line.substr(p + 2));
                } catch (const std::logic_error&) {
                    throw usage_error("parse_table: bad k header");
                }
                break;
            }
        }
    }
    std::map<Word, Word> rows;
    for (const auto& line : detail::lines_of(text)) {
        size_t arrow = line.find("->");
        if (arrow == std::string::npos) throw usage_error("parse_table: expected 'x -> y' in '" + line + "'");
        Word x = detail::parse_code_word(detail::trim(line.substr(0, arrow)));
        Word y = detail::parse_code_word(detail::trim(line.substr(arrow + 2)));
        if (rows.count(x)) throw usage_error("parse_table: duplicate domain word '" + x + "'");
        rows[x] = y;
    }
    return make_rim(rows, k);
}

// ---------------------------------------------------------------------------
// generator words
// ---------------------------------------------------------------------------

inline std::string format_genword(const GenWord& w) { return word_text(w); }

inline GenWord parse_genword(const std::string& text) {
    std::vector<GenSym> syms;
    for (const auto& tok : detail::tokens_of(text)) syms.push_back(parse_sym(tok));
    return make_word(std::move(syms));
}

// ---------------------------------------------------------------------------
// circuits (netlist)
// ---------------------------------------------------------------------------

inline std::string format_netlist(const Circuit& C) {
    // variable labels are implicit in listing order, so they must already be
    // listed in ascending order (true for every circuit this library builds)
    int iv = 0, ov = 0;
    for (const auto& x : C.v) {
        if (x.kind == Gate::Input && x.var != ++iv)
            throw circuit_error("format_netlist: input variables not in listing order");
        if (x.kind == Gate::Output && x.var != ++ov)
            throw circuit_error("format_netlist: output variables not in listing order");
    }
    std::string out;
    for (size_t i = 0; i < C.v.size(); ++i) {
        const Vertex& x = C.v[i];
        out += "v" + std::to_string(i + 1) + ": " + gate_name(x.kind);
        if (x.a >= 0) out += " v" + std::to_string(x.a + 1);
        if (x.b >= 0) out += " v" + std::to_string(x.b + 1);
        out += "\n";
    }
    return out;
}

inline Circuit parse_netlist(const std::string& text) {
    Circuit C;
    int iv = 0, ov = 0;
    auto vertex_ref = [&](const std::string& tok) {
        if (tok.size() < 2 || tok[0] != 'v') throw usage_error("parse_netlist: expected vertex reference, got '" + tok + "'");
        int id;
        try {
            id = std::stoi(tok.substr(1));
        } catch (const std::logic_error&) {
            throw usage_error("parse_netlist: bad vertex reference '" + tok + "'");
        }
        if (id < 1 || id > (int)C.v.size())
            throw usage_error("parse_netlist: reference to undeclared vertex '" + tok + "'");
        return id - 1;
    };
    for (const auto& line : detail::lines_of(text)) {
        auto toks = detail::tokens_of(line);
        if (toks.size() < 2 || toks[0].back() != ':')
            throw usage_error("parse_netlist: expected 'v<i>: <gate> ...' in '" + line + "'");
        std::string idtok = toks[0].substr(0, toks[0].size() - 1);
        int id;
        try {
            if (idtok.size() < 2 || idtok[0] != 'v') throw std::invalid_argument("");
            id = std::stoi(idtok.substr(1));
        } catch (const std::logic_error&) {
            throw usage_error("parse_netlist: bad vertex id '" + idtok + "'");
        }
        if (id != (int)C.v.size() + 1)
            throw usage_error("parse_netlist: vertex ids must be v1, v2, ... in order");
        Vertex x;
        const std::string& g = toks[1];
        if (g == "input") x.kind = Gate::Input;
        else if (g == "output") x.kind = Gate::Output;
        else if (g == "and") x.kind = Gate::And;
        else if (g == "or") x.kind = Gate::Or;
        else if (g == "not") x.kind = Gate::Not;
        else if (g == "fork") x.kind = Gate::Fork;
        else if (g == "zeta1") x.kind = Gate::Zeta1;
        else throw usage_error("parse_netlist: unknown gate '" + g + "'");
        int want = gate_in_degree(x.kind);
        if ((int)toks.size() != 2 + want)
            throw usage_error("parse_netlist: wrong parent count in '" + line + "'");
        if (want >= 1) x.a = vertex_ref(toks[2]);
        if (want == 2) x.b = vertex_ref(toks[3]);
        if (x.kind == Gate::Input) x.var = ++iv;
        if (x.kind == Gate::Output) x.var = ++ov;
        C.v.push_back(x);
    }
    Diagnostics d = validate(C);
    if (!d.ok) throw circuit_error("parse_netlist: " + d.issues.front());
    return C;
}

// ---------------------------------------------------------------------------
// tagged word sets
// ---------------------------------------------------------------------------

inline std::string format_tagged(const TaggedWordSet& s) {
    std::string out = "m=" + std::to_string(s.m) + "\n";
    for (const auto& e : s.entries)
        out += "delta=" + std::to_string(e.dvalue) + " : " + word_text(e.word) + "\n";
    return out;
}

inline TaggedWordSet parse_tagged(const std::string& text) {
    TaggedWordSet s;
    bool have_m = false;
    for (const auto& line : detail::lines_of(text)) {
        if (line.rfind("m=", 0) == 0) {
            try {
                s.m = std::stoi(line.substr(2));
            } catch (const std::logic_error&) {
                throw usage_error("parse_tagged: bad m header");
            }
            have_m = true;
            continue;
        }
        if (line.rfind("delta=", 0) != 0)
            throw usage_error("parse_tagged: expected 'delta=<d> : <tokens>' in '" + line + "'");
        size_t colon = line.find(':');
        if (colon == std::string::npos) throw usage_error("parse_tagged: missing ':' in '" + line + "'");
        TaggedEntry e;
        try {
            e.dvalue = std::stoi(line.substr(6, colon - 6));
        } catch (const std::logic_error&) {
            throw usage_error("parse_tagged: bad delta in '" + line + "'");
        }
        e.word = parse_genword(line.substr(colon + 1));
        e.table = eval_word_symbolic(e.word).table;
        s.entries.push_back(std::move(e));
    }
    if (!have_m) throw usage_error("parse_tagged: missing 'm=' header");
    return s;
}

// ---------------------------------------------------------------------------
// bit strings
// ---------------------------------------------------------------------------

inline std::string bits_to_hex(const Word& bits) {
    require_word(bits, 2, "bits_to_hex");
    std::string hex;
    for (size_t i = 0; i < bits.size(); i += 4) {
        int v = 0;
        for (size_t j = i; j < i + 4; ++j) v = (v << 1) | (j < bits.size() && bits[j] == '1');
        hex += "0123456789abcdef"[v];
    }
    return std::to_string(bits.size()) + ":" + hex;
}

inline Word hex_to_bits(const std::string& s) {
    size_t colon = s.find(':');
    if (colon == std::string::npos) throw usage_error("hex_to_bits: expected '<nbits>:<hex>'");
    int n;
    try {
        n = std::stoi(s.substr(0, colon));
    } catch (const std::logic_error&) {
        throw usage_error("hex_to_bits: bad length prefix");
    }
    Word bits;
    for (size_t i = colon + 1; i < s.size(); ++i) {
        char c = s[i];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw usage_error("hex_to_bits: bad hex digit");
        for (int b = 3; b >= 0; --b) bits += char('0' + ((v >> b) & 1));
    }
    if ((int)bits.size() < n || (int)bits.size() - n >= 4)
        throw usage_error("hex_to_bits: length prefix inconsistent with digits");
    bits.resize(n);
    return bits;
}

} // namespace rim
