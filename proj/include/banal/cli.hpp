#pragma once

/**
 * @file cli.hpp
 * @brief The `mseg` command-line front end.
 *
 * Exit status: 0 on success, 1 on a domain error (its name goes to the
 * diagnostic stream), 2 on a usage or input error.
 */

#include <banal/banal.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace banal::cli {

using nlohmann::json;

/// Environment variable consulted when `--lines` is absent.
inline constexpr const char* lines_env = "MSEG_LINES";

namespace detail {

inline json to_json(const SegmentSequence& seq) {
    json out = json::array();
    for (const auto& s : seq) out.push_back(to_string(s));
    return out;
}

inline std::string plus_joined(const SegmentSequence& seq) {
    if (seq.empty()) return "0";
    std::string out;
    for (const auto& s : seq) out += (out.empty() ? "" : " + ") + to_string(s);
    return out;
}

inline std::string arc_string(const std::vector<ArcSegment>& arcs) {
    std::string out = "(";
    for (std::size_t k = 0; k < arcs.size(); ++k)
        out += (k ? ", " : "") + std::string("[") + std::to_string(arcs[k].a) + "," + std::to_string(arcs[k].b) + "]";
    return out + ")";
}

inline std::string pattern_string(const PrecedencePattern& pattern) {
    std::string out = "{";
    bool first = true;
    for (auto [i, j] : pattern) {
        out += (first ? "" : ", ") + std::string("(") + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        first = false;
    }
    return out + "}";
}

inline const char* ordering_name(std::strong_ordering c) {
    return c < 0 ? "LESS" : c > 0 ? "GREATER" : "EQUAL";
}

inline LineRegistry load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::Registry, "cannot open registry file " + path);
    return LineRegistry::parse(in);
}

inline bool is_usage_error(Errc code) {
    return code == Errc::Syntax || code == Errc::UnknownLine || code == Errc::Bounds || code == Errc::Registry;
}

} // namespace detail

/// Run one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorics of banal multisegments on cuspidal lines", "mseg"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string lines_path;
    bool as_json = false;
    std::string conv_name = "z";
    std::string policy_name = "swap";
    bool count_only = false;
    app.add_option("--lines", lines_path, "registry file: `line <id> e=<int|inf> deg=<int> dual=<id>` per line");
    app.add_flag("--json", as_json, "emit JSON");
    app.add_option("--conv", conv_name, "segment word convention")->check(CLI::IsMember({"z", "l"}));
    app.add_option("--policy", policy_name, "branch policy for normalize")
        ->check(CLI::IsMember({"swap", "union", "all"}));
    app.add_flag("--count", count_only, "print only the number of results (enumerate)");

    std::string first, second, support_text, target;
    auto verb = [&](const char* name, const char* help, int operands) {
        auto* sub = app.add_subcommand(name, help);
        if (operands >= 1) sub->add_option("operand", first)->required();
        if (operands >= 2) sub->add_option("second", second)->required();
        return sub;
    };
    auto* banal_cmd = verb("banal", "is the multisegment banal", 1);
    auto* ranged_cmd = verb("ranged", "a ranged form of the multisegment", 1);
    auto* ordered_cmd = verb("ordered", "ordered form of a connected banal multisegment", 1);
    auto* compare_cmd = verb("compare", "compare two multisegments with the same support", 2);
    auto* word_cmd = verb("word", "socle word of a connected banal multisegment", 1);
    auto* jacquet_cmd = verb("jacquet", "full-flag Jacquet words of a segment sequence", 1);
    auto* mult_cmd = verb("mult", "multiplicity of a word in the Jacquet words of a sequence", 2);
    auto* irreducible_cmd = verb("irreducible", "no two segments are linked", 1);
    auto* normalize_cmd = verb("normalize", "rewrite a sequence to an inversion-free one", 1);
    auto* enumerate_cmd = verb("enumerate", "all multisegments with a given support", 0);
    enumerate_cmd->add_option("--support", support_text, "support, e.g. 0:1,1:1,2:1@einf")->required();
    auto* lift_cmd = verb("lift", "lift a banal multisegment to an infinite line", 1);
    lift_cmd->add_option("--to", target, "target line id")->required();
    auto* reduce_cmd = verb("reduce", "reduce a multisegment to a finite line", 1);
    reduce_cmd->add_option("--to", target, "target line id")->required();
    auto* dual_cmd = verb("dual", "dual multisegment", 1);
    auto* pattern_cmd = verb("pattern", "precedence pattern of a segment sequence (1-based)", 1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        LineRegistry registry = LineRegistry::defaults();
        if (!lines_path.empty()) {
            registry = detail::load_registry(lines_path);
        } else if (const char* env = std::getenv(lines_env); env && *env) {
            registry = detail::load_registry(env);
        }
        const Convention conv = conv_name == "l" ? Convention::L : Convention::Z;
        auto multiseg = [&](const std::string& text) { return parse_multisegment(registry, text); };
        auto sequence = [&](const std::string& text) { return parse_sequence(registry, text); };
        auto boolean = [&](const char* key, bool value) {
            if (as_json) out << json{{key, value}}.dump() << "\n";
            else out << (value ? "true" : "false") << "\n";
        };

        if (banal_cmd->parsed()) {
            boolean("banal", is_banal(multiseg(first)));
        } else if (ranged_cmd->parsed()) {
            auto form = ranged_form(multiseg(first));
            if (as_json) out << json{{"ranged_form", detail::to_json(form)}}.dump() << "\n";
            else out << to_string(form) << "\n";
        } else if (ordered_cmd->parsed()) {
            auto m = multiseg(first);
            auto form = ordered_form(m);
            auto segs = ordered_segments(m);
            if (as_json) {
                json arcs = json::array();
                for (const auto& s : form.segments) arcs.push_back({s.a, s.b});
                out << json{{"base", form.base}, {"line", form.line.id()}, {"t", form.t},
                            {"ordered_form", detail::to_json(segs)}, {"arc", arcs}}
                           .dump()
                    << "\n";
            } else {
                out << "base  " << form.base << "@" << form.line.id() << "\n"
                    << "t     " << form.t << "\n"
                    << "form  " << to_string(segs) << "\n"
                    << "arc   " << detail::arc_string(form.segments) << "\n";
            }
        } else if (compare_cmd->parsed()) {
            const char* c = detail::ordering_name(compare(multiseg(first), multiseg(second)));
            if (as_json) out << json{{"compare", c}}.dump() << "\n";
            else out << c << "\n";
        } else if (word_cmd->parsed()) {
            auto w = to_string(socle_word(multiseg(first), conv));
            if (as_json) out << json{{"word", w}}.dump() << "\n";
            else out << w << "\n";
        } else if (jacquet_cmd->parsed()) {
            auto sum = jacquet_words(sequence(first), conv);
            if (as_json) {
                json obj = json::object();
                for (const auto& [w, k] : sum) obj[to_string(w)] = k;
                out << obj.dump() << "\n";
            } else {
                for (const auto& [w, k] : sum) out << k << "  " << to_string(w) << "\n";
            }
        } else if (mult_cmd->parsed()) {
            auto k = jacquet_multiplicity(parse_word(registry, first), sequence(second), conv);
            if (as_json) out << json{{"multiplicity", k}}.dump() << "\n";
            else out << k << "\n";
        } else if (irreducible_cmd->parsed()) {
            boolean("irreducible", is_irreducible_product(multiseg(first)));
        } else if (normalize_cmd->parsed()) {
            auto seq = sequence(first);
            if (policy_name == "all") {
                auto outcomes = reachable_normal_forms(seq);
                if (as_json) {
                    json arr = json::array();
                    for (const auto& o : outcomes) arr.push_back(detail::to_json(o));
                    out << json{{"outcomes", arr}}.dump() << "\n";
                } else {
                    for (const auto& o : outcomes) out << to_string(o) << "\n";
                }
            } else {
                auto result = normalize_to_ranged(seq, policy_name == "union" ? Branch::Union : Branch::Swap);
                if (as_json) {
                    json trace = json::array();
                    for (const auto& m : result.trace)
                        trace.push_back({{"position", m.position + 1},
                                         {"branch", std::string(name(m.branch))},
                                         {"before", detail::to_json(m.before)},
                                         {"after", detail::to_json(m.after)}});
                    out << json{{"result", detail::to_json(result.result)}, {"trace", trace}}.dump() << "\n";
                } else {
                    out << to_string(result.result) << "\n";
                    for (const auto& m : result.trace)
                        out << "  " << m.position + 1 << "  " << name(m.branch) << "  " << to_string(m.before)
                            << " -> " << to_string(m.after) << "\n";
                }
            }
        } else if (enumerate_cmd->parsed()) {
            auto all = enumerate_multisegments(parse_support(registry, support_text));
            if (as_json) {
                json j{{"count", all.size()}};
                if (!count_only) {
                    json arr = json::array();
                    for (const auto& m : all) arr.push_back(to_string(m));
                    j["multisegments"] = arr;
                }
                out << j.dump() << "\n";
            } else if (count_only) {
                out << all.size() << "\n";
            } else {
                for (const auto& m : all) out << to_string(m) << "\n";
            }
        } else if (lift_cmd->parsed() || reduce_cmd->parsed()) {
            const auto& line = registry.at(target);
            auto seq = sequence(first);
            auto result = lift_cmd->parsed() ? lift(seq, line) : reduce_mod(seq, line);
            if (as_json) out << json{{"sequence", detail::to_json(result)}}.dump() << "\n";
            else out << detail::plus_joined(result) << "\n";
        } else if (dual_cmd->parsed()) {
            auto d = dual_multisegment(registry, multiseg(first));
            if (as_json) out << json{{"multisegment", detail::to_json(d.segments())}}.dump() << "\n";
            else out << to_string(d) << "\n";
        } else if (pattern_cmd->parsed()) {
            auto seq = sequence(first);
            auto pattern = precedence_pattern(seq);
            for (auto [i, j] : pattern)
                if (chain_wraps(seq[i], seq[j]))
                    err << "note: chain for (" << i + 1 << "," << j + 1 << ") is longer than the period\n";
            if (as_json) {
                json arr = json::array();
                for (auto [i, j] : pattern) arr.push_back({i + 1, j + 1});
                out << json{{"pattern", arr}}.dump() << "\n";
            } else {
                out << detail::pattern_string(pattern) << "\n";
            }
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << name(e.code()) << ": " << e.what() << "\n";
        return detail::is_usage_error(e.code()) ? 2 : 1;
    }
}

} // namespace banal::cli
