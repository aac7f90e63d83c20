#pragma once

// Command-line front end. Exit codes: 0 ok, 2 bad input, 3 precondition violated.

#include "braid.hpp"
#include "errors.hpp"
#include "homfly.hpp"
#include "inner.hpp"
#include "json_io.hpp"
#include "mfw.hpp"
#include "resolve.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace posbraid {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_parse = 2,
    exit_precondition = 3,
};

namespace detail {

struct CliOptions {
    std::optional<int> strands;
    std::string format = "text";
};

inline void run_homfly(const std::string& word, const CliOptions& o, std::ostream& out) {
    const Laurent2 p = homfly_positive_closure(parse_word(word, o.strands));
    out << (o.format == "json" ? to_json(p).dump() : to_string(p)) << '\n';
}

inline void run_tree(const std::string& word, const CliOptions& o, std::ostream& out) {
    const ResolutionTree t = build_tree(parse_word(word, o.strands));
    if (o.format == "json") {
        out << to_json(t).dump() << '\n';
    } else if (o.format == "dot") {
        out << to_dot(t);
    } else {
        out << to_outline(t);
    }
}

inline void run_mfw(const std::string& word, const CliOptions& o, std::ostream& out) {
    const MfwReport r = mfw_report(parse_word(word, o.strands));
    out << (o.format == "json" ? to_json(r).dump() : to_text(r)) << '\n';
}

inline void run_sharp(const std::string& word, const CliOptions& o, std::ostream& out) {
    const BraidWord w = parse_word(word, o.strands);
    const bool sharp = is_mfw_sharp(w);
    const auto cert = sharpness_certificate(w);
    if (o.format == "json") {
        ojson j{{"sharp", sharp}, {"certificate", nullptr}};
        if (cert) j["certificate"] = to_json(*cert);
        out << j.dump() << '\n';
        return;
    }
    out << "sharp=" << (sharp ? "true" : "false") << '\n';
    if (cert) out << "certificate=" << to_text(*cert) << '\n';
}

inline void run_inner(const std::string& a, const std::string& b, const CliOptions& o, std::ostream& out) {
    BraidWord u = parse_word(a, o.strands);
    BraidWord v = parse_word(b, o.strands);
    if (!o.strands) {
        const int n = std::max(u.strands(), v.strands());
        u = with_strands(u, n);
        v = with_strands(v, n);
    }
    const Laurent2 p = inner_product_def(u, v);
    out << (o.format == "json" ? to_json(p).dump() : to_string(p)) << '\n';
}

inline void run_gram(int n, const CliOptions& o, std::ostream& out) {
    const GramMatrix g = gram_matrix(n);
    if (o.format == "json") {
        out << to_json(g).dump() << '\n';
        return;
    }
    const auto d = g.dimension();
    out << "n=" << n << " size=" << d << 'x' << d << " identity=" << (g.is_identity() ? "true" : "false") << '\n';
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (g.at(r, c) != Laurent2::constant(r == c ? 1 : 0)) {
                out << "entry " << to_text(g.permutations[r]) << ' ' << to_text(g.permutations[c]) << " = "
                    << to_string(g.at(r, c)) << '\n';
            }
        }
    }
}

inline void run_classify3(const std::string& word, const CliOptions& o, std::ostream& out) {
    const Classification3 c = classify3(parse_word(word, o.strands));
    out << (o.format == "json" ? to_json(c).dump() : to_text(c)) << '\n';
}

inline void run_simple(const std::string& word, const CliOptions& o, std::ostream& out) {
    const BraidWord w = parse_word(word, o.strands);
    const Permutation a = perm_of_word(w);
    const bool simple = is_simple_word(w);
    if (o.format == "json") {
        out << ojson{{"simple", simple}, {"permutation", to_json(a)}, {"length", coxeter_length(a)}}.dump() << '\n';
        return;
    }
    out << "simple=" << (simple ? "true" : "false") << " permutation=" << to_text(a)
        << " length=" << coxeter_length(a) << '\n';
}

inline void run_basis(const std::string& word, const CliOptions& o, std::ostream& out) {
    const HeckeDecomposition d = hecke_decompose_iterative(parse_word(word, o.strands));
    if (o.format == "json") {
        out << to_json(d).dump() << '\n';
        return;
    }
    for (const auto& [a, c] : d) {
        out << to_text(a) << " (" << dot_label(reduced_word(a)) << ") : " << to_string(c) << '\n';
    }
}

} // namespace detail

/// Runs one subcommand; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact HOMFLYPT and braid-index computations for closed positive braids", "posbraid"};
    app.require_subcommand(1);

    detail::CliOptions opts;
    app.add_option("--strands", opts.strands, "Strand count (at least max letter + 1)")->check(CLI::PositiveNumber);
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    std::string word;
    std::string word_b;
    int gram_n = 0;
    auto word_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help)->fallthrough();
        sub->add_option("word", word, "Positive word, e.g. 32322323 or \"3 2 3 2\"")->required();
        return sub;
    };

    auto* homfly = word_command("homfly", "HOMFLYPT polynomial of the closure");
    auto* tree = word_command("tree", "First-descent simple resolution tree");
    auto* mfw = word_command("mfw", "MFW bounds and degrees");
    auto* sharp = word_command("sharp", "Whether the MFW inequality is sharp, with a certificate");
    auto* classify = word_command("classify3", "Braid index of a positive 3-strand word");
    auto* simple = word_command("simple", "Whether the word is a simple braid");
    auto* basis = word_command("basis", "Coordinates in the simple-braid basis");

    auto* inner = app.add_subcommand("inner", "Inner product <a, b>")->fallthrough();
    inner->add_option("a", word, "First positive word")->required();
    inner->add_option("b", word_b, "Second positive word")->required();

    auto* gram = app.add_subcommand("gram", "Gram matrix of the simple braids of S_n")->fallthrough();
    gram->add_option("n", gram_n, "Strand count")->required()->check(CLI::Range(1, 7));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    }

    try {
        if (opts.format == "dot" && !tree->parsed()) throw parse_error("--format dot is only available for tree");

        if (homfly->parsed()) detail::run_homfly(word, opts, out);
        else if (tree->parsed()) detail::run_tree(word, opts, out);
        else if (mfw->parsed()) detail::run_mfw(word, opts, out);
        else if (sharp->parsed()) detail::run_sharp(word, opts, out);
        else if (classify->parsed()) detail::run_classify3(word, opts, out);
        else if (simple->parsed()) detail::run_simple(word, opts, out);
        else if (basis->parsed()) detail::run_basis(word, opts, out);
        else if (inner->parsed()) detail::run_inner(word, word_b, opts, out);
        else if (gram->parsed()) detail::run_gram(gram_n, opts, out);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}

} // namespace posbraid
