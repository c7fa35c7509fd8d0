// Command-line surface: encode/decode circuits, evaluate and compile words,
// run completions, decompositions and the brute-force oracles, and execute
// the named property suites.
//
// Exit codes: 0 success, 1 property violation, 2 usage/domain error,
// 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rim/analysis.hpp"
#include "rim/completion.hpp"
#include "rim/convert.hpp"
#include "rim/io.hpp"
#include "rim/suites.hpp"
#include "rim/unambiguous.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw rim::usage_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Word argument: inline tokens, or @file to read from a file.
rim::GenWord word_arg(const std::string& v) {
    if (!v.empty() && v[0] == '@') return rim::parse_genword(slurp(v.substr(1)));
    return rim::parse_genword(v);
}

rim::Circuit circuit_arg(const std::string& v) { return rim::parse_netlist(slurp(v)); }
rim::RimTable table_arg(const std::string& v) { return rim::parse_table(slurp(v)); }

std::string show_bits(const rim::Word& bits, const std::string& format) {
    if (format == "hex") return rim::bits_to_hex(bits);
    return bits; // text and bits are the same for bit strings
}

rim::Word read_bits(const std::string& s) {
    if (s.find(':') != std::string::npos) return rim::hex_to_bits(s);
    rim::require_word(s, 2, "bit string");
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebra of right-ideal morphisms, partial circuits and their compilers"};
    app.require_subcommand(1);
    int cap = 16;
    uint64_t seed = 0;
    std::string format = "text";
    app.add_option("--cap", cap, "brute-force input-length cap")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--format", format, "output format: text|bits|hex")
        ->check(CLI::IsMember({"text", "bits", "hex"}))
        ->capture_default_str();

    std::string circuit_in, word_in, input_bits, table_in, bits_in;
    std::string method, mode = "m", algo = "seq", suite_name, inner_in, outer_in;
    int level = -1, samples = 50;

    auto* enc = app.add_subcommand("encode", "serialize a circuit to its bit encoding");
    enc->add_option("--circuit", circuit_in, "netlist file ('-' for stdin)")->required();

    auto* dec = app.add_subcommand("decode", "decode a bit encoding to a netlist");
    dec->add_option("--bits", bits_in, "bit string or <nbits>:<hex>")->required();

    auto* ev = app.add_subcommand("eval", "evaluate a word or circuit on an input");
    ev->add_option("--word", word_in, "generator word (tokens, or @file)");
    ev->add_option("--circuit", circuit_in, "netlist file");
    ev->add_option("--input", input_bits, "input bit string")->required();

    auto* woc = app.add_subcommand("w-of-c", "compile a circuit to a generator word");
    woc->add_option("--circuit", circuit_in, "netlist file")->required();

    auto* cow = app.add_subcommand("c-of-w", "compile a generator word to a circuit");
    cow->add_option("--word", word_in, "generator word")->required();

    auto* comp = app.add_subcommand("complete", "run a completion procedure");
    comp->add_option("--method", method, "tilde|bot|table|word|circuit")
        ->check(CLI::IsMember({"tilde", "bot", "table", "word", "circuit"}))
        ->required();
    comp->add_option("--table", table_in, "table file (tilde/bot/table)");
    comp->add_option("--word", word_in, "generator word (word method)");
    comp->add_option("--circuit", circuit_in, "netlist file (circuit method)");
    comp->add_option("--mode", mode, "table method: m|plep")->check(CLI::IsMember({"m", "plep"}));

    auto* deco = app.add_subcommand("decompose", "decompose a monoid word into tagged pieces");
    deco->add_option("--algo", algo, "seq|par")->check(CLI::IsMember({"seq", "par"}));
    deco->add_option("--word", word_in, "generator word")->required();

    auto* cu = app.add_subcommand("compose-unions", "compose two tagged word sets");
    cu->add_option("--inner", inner_in, "tagged set applied first (file)")->required();
    cu->add_option("--outer", outer_in, "tagged set applied second (file)")->required();

    auto* emp = app.add_subcommand("empty", "decide function emptiness of a word");
    emp->add_option("--word", word_in, "generator word")->required();

    auto* del = app.add_subcommand("delta", "length difference of a word's morphism");
    del->add_option("--word", word_in, "generator word")->required();

    auto* chk = app.add_subcommand("check", "run a named property suite");
    chk->add_option("--suite", suite_name, "suite name, or 'all'")->required();
    chk->add_option("--samples", samples, "sample count")->capture_default_str();

    auto* ora = app.add_subcommand("oracle", "brute-force table of a word");
    ora->add_option("--word", word_in, "generator word")->required();
    ora->add_option("--level", level, "input length (default: the word's l_in)");

    try {
        app.parse(argc, argv);

        if (enc->parsed()) {
            std::cout << show_bits(rim::encode_precedence(circuit_arg(circuit_in)), format) << "\n";
        } else if (dec->parsed()) {
            std::cout << rim::format_netlist(rim::decode_precedence(read_bits(bits_in)));
        } else if (ev->parsed()) {
            rim::Word x = read_bits(input_bits);
            if (!word_in.empty()) {
                rim::EvalResult r = rim::eval_word_on_input(word_arg(word_in), x);
                if (r.status == rim::EvalStatus::Defined) std::cout << rim::detail::show_word(r.value) << "\n";
                else if (r.status == rim::EvalStatus::TooShort) std::cout << "too-short\n";
                else std::cout << "undefined\n";
            } else if (!circuit_in.empty()) {
                auto y = rim::eval_circuit(circuit_arg(circuit_in), x);
                if (y) std::cout << rim::detail::show_word(*y) << "\n";
                else std::cout << "undefined\n";
            } else {
                throw rim::usage_error("eval needs --word or --circuit");
            }
        } else if (woc->parsed()) {
            std::cout << rim::word_text(rim::word_of_circuit(circuit_arg(circuit_in))) << "\n";
        } else if (cow->parsed()) {
            std::cout << rim::format_netlist(rim::circuit_of_word(word_arg(word_in)));
        } else if (comp->parsed()) {
            if (method == "tilde") {
                std::cout << rim::format_table(rim::tilde_complete(table_arg(table_in)));
            } else if (method == "bot") {
                std::cout << rim::format_table(rim::three_letter_complete(table_arg(table_in)));
            } else if (method == "table") {
                auto md = mode == "m" ? rim::CompleteMode::M : rim::CompleteMode::Plep;
                std::cout << rim::format_table(rim::nondet_table_complete(table_arg(table_in), md));
            } else if (method == "word") {
                std::cout << rim::word_text(rim::complete_pfl_word(word_arg(word_in))) << "\n";
            } else {
                std::cout << rim::format_netlist(rim::complete_circuit(circuit_arg(circuit_in)));
            }
        } else if (deco->parsed()) {
            rim::GenWord w = word_arg(word_in);
            rim::TaggedWordSet s = algo == "par" ? rim::decompose_word_parallel(w)
                                                 : rim::decompose_word_sequential(w);
            std::cout << rim::format_tagged(s);
        } else if (cu->parsed()) {
            rim::TaggedWordSet U = rim::parse_tagged(slurp(inner_in));
            rim::TaggedWordSet V = rim::parse_tagged(slurp(outer_in));
            std::cout << rim::format_tagged(rim::compose_tagged_sets(U, V));
        } else if (emp->parsed()) {
            std::cout << (rim::emptiness_check(word_arg(word_in), cap) ? "true" : "false") << "\n";
        } else if (del->parsed()) {
            auto d = rim::delta_compute(word_arg(word_in), cap);
            if (d) std::cout << *d << "\n";
            else std::cout << "undefined\n";
        } else if (chk->parsed()) {
            bool all_pass = true;
            auto run_one = [&](const std::string& name, const rim::SuiteFn& fn) {
                rim::SuiteReport rep = fn(seed, samples);
                std::cout << rep.name << " samples=" << rep.samples << " "
                          << (rep.pass ? "pass" : "fail");
                if (!rep.pass) std::cout << " witness=" << rep.witness;
                std::cout << "\n";
                all_pass = all_pass && rep.pass;
            };
            if (suite_name == "all") {
                for (const auto& [name, fn] : rim::suite_registry()) run_one(name, fn);
            } else {
                auto it = rim::suite_registry().find(suite_name);
                if (it == rim::suite_registry().end())
                    throw rim::usage_error("unknown suite '" + suite_name + "'");
                run_one(it->first, it->second);
            }
            return all_pass ? 0 : 1;
        } else if (ora->parsed()) {
            rim::GenWord w = word_arg(word_in);
            int m = level >= 0 ? level : rim::eval_word_symbolic(w).l_in;
            std::cout << rim::format_table(rim::brute_force_table(w, m, cap));
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const rim::rim_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind == "resource" ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
