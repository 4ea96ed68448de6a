#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with string streams.
//
// Exit status: 0 success, 1 domain error or failed verification, 2 usage.

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "colcomp/colcomp.hpp"
#include "colcomp/json_io.hpp"

namespace colcomp::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

inline void require_format(const std::string& format, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (format == a)
            return;
    throw UsageError("--format " + format + " is not supported by this command");
}

inline std::string chain_text(const Chain& c, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            s += sep;
        s += c[i].empty() ? "∅" : render(c[i]);
    }
    return s;
}

inline std::string label_text(const Label& l)
{
    std::string s;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i)
            s += ' ';
        s += "(" + std::to_string(l[i].urn) + "," + std::to_string(l[i].type) + ")";
    }
    return s;
}

// Chain for chain-to-perm: JSON (top first) when it starts with '[',
// otherwise one composition per line in increasing rank; blank lines are
// skipped and the empty composition at the bottom is implied.
inline Chain read_chain(const std::string& text, unsigned m)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(ParseErrorKind::malformed, e.what());
        }
        Chain c = chain_from_json(j);
        std::reverse(c.begin(), c.end());
        return c;
    }
    if (m == 0)
        throw UsageError("--m is required for a text chain");
    Chain c{ColoredComposition(m)};
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::string_view v = line;
        while (!v.empty() && (v.back() == '\r' || v.back() == ' '))
            v.remove_suffix(1);
        if (v.empty() || v == "∅")
            continue;
        for (std::size_t start = 0;;) {
            const auto semi = v.find(';', start);
            c.push_back(parse_composition(v.substr(start, semi == std::string_view::npos ? semi : semi - start), m));
            if (semi == std::string_view::npos)
                break;
            start = semi + 1;
        }
    }
    return c;
}

inline void print_verify(std::ostream& out, const std::string& name, const SweepResult& r)
{
    if (r)
        out << "ok " << name << " checked=" << r.checked << '\n';
    else
        out << "FAIL " << name << ": " << r.counterexample << '\n';
}

} // namespace detail

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, std::istream& in)
{
    CLI::App app{"Poset of m-colored compositions", "colcomp"};
    app.require_subcommand(1);

    unsigned m = 0;
    unsigned n = 0;
    unsigned positions = 0;
    std::string comp;
    std::string from;
    std::string to;
    std::string perm;
    std::string chain_arg;
    std::string method = "all";
    std::string format = "text";
    std::string bundle;
    std::uint64_t max_size = default_max_permutations;
    bool up = false;
    bool down = false;
    bool series = false;
    bool pretty = false;

    const std::vector<std::string> formats{"text", "json", "dot", "count"};
    auto add_m = [&](CLI::App* c, bool required = true) {
        auto* o = c->add_option("--m", m, "Number of colors")->check(CLI::PositiveNumber);
        if (required)
            o->required();
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "Output format")->check(CLI::IsMember(formats))->envname("COLCOMP_FORMAT");
    };

    auto* enumerate = app.add_subcommand("enumerate", "List the m-colored compositions of n");
    add_m(enumerate);
    enumerate->add_option("--n", n, "Weight")->required();
    enumerate->add_flag("--pretty", pretty, "Bar/omega notation in text output");
    add_format(enumerate);

    auto* covers = app.add_subcommand("covers", "Up- or down-covers of a composition");
    add_m(covers);
    covers->add_option("--comp", comp, "Composition, e.g. 2c0,1c1")->required();
    covers->add_flag("--up", up, "Covering elements (default)");
    covers->add_flag("--down", down, "Covered elements");
    covers->add_flag("--pretty", pretty, "Bar/omega notation in text output");
    add_format(covers);

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of ranks 0..n as DOT");
    add_m(hasse);
    hasse->add_option("--n", n, "Highest rank")->required();
    add_format(hasse);

    auto* chains = app.add_subcommand("chains", "Labeled maximal chains of [from, to]");
    add_m(chains);
    chains->add_option("--from", from, "Bottom (default: empty composition)");
    chains->add_option("--to", to, "Top")->required();
    add_format(chains);

    auto* p2c = app.add_subcommand("perm-to-chain", "Saturated chain of a colored permutation");
    add_m(p2c);
    p2c->add_option("--perm", perm, "Permutation, e.g. 2c1,1c0,3c1")->required();
    add_format(p2c);

    auto* c2p = app.add_subcommand("chain-to-perm", "Colored permutation of a saturated chain (stdin if no --chain)");
    add_m(c2p, false);
    c2p->add_option("--chain", chain_arg, "Chain as ';'-separated compositions in increasing rank, or JSON");
    add_format(c2p);

    auto* descents = app.add_subcommand("descents", "Descent data of a permutation, or f_n^(m) for all compositions of n");
    add_m(descents);
    auto* perm_opt = descents->add_option("--perm", perm, "Permutation");
    auto* n_opt = descents->add_option("--n", n, "Tabulate over all of C_m wr S_n");
    perm_opt->excludes(n_opt);
    descents->add_option("--max-size", max_size, "Refuse to enumerate more permutations than this");
    add_format(descents);

    auto* mobius = app.add_subcommand("mobius", "Möbius function");
    add_m(mobius);
    mobius->add_option("--from", from, "Bottom (default: empty composition)");
    auto* to_opt = mobius->add_option("--to", to, "Top");
    mobius->add_option("--method", method, "closed|labels|recursion|all")
        ->check(CLI::IsMember({"closed", "labels", "recursion", "all"}));
    auto* series_opt = mobius->add_flag("--series", series, "Signed and unsigned rank sums as JSON");
    mobius->add_option("--n", n, "Highest rank for --series");
    series_opt->excludes(to_opt);
    add_format(mobius);

    auto* qsym = app.add_subcommand("qsym", "Fundamental quasisymmetric polynomial L_alpha");
    add_m(qsym);
    qsym->add_option("--comp", comp, "Composition")->required();
    qsym->add_option("--positions", positions, "Truncation N (default |alpha|, at least 1)");
    add_format(qsym);

    auto* verify = app.add_subcommand("verify", "Exhaustive property sweep");
    verify
        ->add_option("bundle", bundle,
                     "counting|covers|bijection|pieri|shuffle|cl|mobius|truncated|series|witness")
        ->required()
        ->check(CLI::IsMember(
            {"counting", "covers", "bijection", "pieri", "shuffle", "cl", "mobius", "truncated", "series", "witness"}));
    add_m(verify);
    verify->add_option("--n", n, "Rank / size bound")->required();
    verify->add_option("--max-size", max_size, "Refuse factorial-scale sweeps above this size");

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (enumerate->parsed()) {
            detail::require_format(format, {"text", "json", "count"});
            if (format == "count") {
                out << count_compositions(m, n) << '\n';
                return 0;
            }
            const auto all = enumerate_compositions(m, n);
            if (format == "json")
                detail::emit(out, json(all));
            else
                for (const auto& a : all)
                    out << (pretty ? render_pretty(a) : render(a)) << '\n';
            return 0;
        }

        if (covers->parsed()) {
            detail::require_format(format, {"text", "json", "count"});
            if (up && down)
                throw UsageError("--up and --down are mutually exclusive");
            const auto a = parse_composition(comp, m);
            if (down && a.empty())
                throw std::domain_error("the empty composition covers nothing");
            const auto result = down ? down_covers(a) : up_covers(a);
            if (format == "count")
                out << result.size() << '\n';
            else if (format == "json")
                detail::emit(out, json(std::vector<ColoredComposition>(result.begin(), result.end())));
            else
                for (const auto& b : result)
                    out << (pretty ? render_pretty(b) : render(b)) << '\n';
            return 0;
        }

        if (hasse->parsed()) {
            detail::require_format(format, {"text", "dot"});
            out << hasse_dot(m, n);
            return 0;
        }

        if (chains->parsed()) {
            detail::require_format(format, {"text", "json", "count"});
            const auto bottom = parse_composition(from, m);
            const auto top = parse_composition(to, m);
            const Interval iv = interval(bottom, top);
            std::vector<LabeledChain> labeled;
            for_each_maximal_chain(iv, [&](const Chain& c) { labeled.push_back(label_chain(c)); });
            if (format == "count")
                out << labeled.size() << '\n';
            else if (format == "json")
                detail::emit(out, json(labeled));
            else
                for (const auto& lc : labeled)
                    out << detail::chain_text(lc.chain, " > ") << " | " << detail::label_text(lc.label) << '\n';
            return 0;
        }

        if (p2c->parsed()) {
            detail::require_format(format, {"text", "json"});
            const auto u = parse_permutation(perm, m);
            Chain c = chain_of_permutation(u);
            if (format == "json") {
                std::reverse(c.begin(), c.end());
                detail::emit(out, json(c));
            } else {
                for (std::size_t i = 1; i < c.size(); ++i)
                    out << render(c[i]) << '\n';
            }
            return 0;
        }

        if (c2p->parsed()) {
            detail::require_format(format, {"text", "json"});
            std::string text = chain_arg;
            if (c2p->count("--chain") == 0)
                text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
            const Chain c = detail::read_chain(text, m);
            const auto u = permutation_of_chain(c);
            if (format == "json")
                detail::emit(out, json(u));
            else
                out << render(u) << '\n';
            return 0;
        }

        if (descents->parsed()) {
            detail::require_format(format, {"text", "json"});
            if (descents->count("--perm")) {
                const auto u = parse_permutation(perm, m);
                const auto col = color_composition(u);
                const auto cdc = colored_descent_composition(u);
                std::vector<unsigned> values;
                for (const Letter& l : u.letters())
                    values.push_back(l.value);
                const auto des = descent_set(values);
                if (format == "json") {
                    detail::emit(out, json{{"color_composition", col},
                                           {"colored_descent_composition", cdc},
                                           {"descent_set", des}});
                } else {
                    out << "color_composition " << render(col) << '\n';
                    out << "colored_descent_composition " << render(cdc) << '\n';
                    out << "descent_set";
                    for (unsigned d : des)
                        out << ' ' << d;
                    out << '\n';
                }
                return 0;
            }
            if (descents->count("--n") == 0)
                throw UsageError("descents needs --perm or --n");
            const auto table = count_by_descent_composition(m, n, max_size);
            if (format == "json") {
                json rows = json::array();
                for (const auto& [a, f] : table)
                    rows.push_back({{"composition", a}, {"count", f}});
                detail::emit(out, rows);
            } else {
                for (const auto& [a, f] : table)
                    out << render(a) << ' ' << f << '\n';
            }
            return 0;
        }

        if (mobius->parsed()) {
            if (series) {
                if (mobius->count("--n") == 0)
                    throw UsageError("--series needs --n");
                const auto s = mobius_series(m, n);
                detail::emit(out, json{{"m", m}, {"signed", s.signed_coefficients}, {"unsigned", s.unsigned_coefficients}});
                return 0;
            }
            if (mobius->count("--to") == 0)
                throw UsageError("mobius needs --to (or --series)");
            detail::require_format(format, {"text", "json"});
            const auto bottom = parse_composition(from, m);
            const auto top = parse_composition(to, m);
            if (!less_or_equal(bottom, top))
                throw OrderError(render(bottom) + " is not below " + render(top));
            const bool lower = bottom.empty();
            if (method == "closed" && !lower)
                throw std::domain_error("the closed form covers lower intervals [empty, alpha] only");

            json values = json::object();
            std::vector<std::string> words;
            if (method == "closed" || method == "all") {
                if (lower)
                    values["closed"] = mobius_closed_form(top);
                words.push_back(lower ? std::to_string(mobius_closed_form(top)) : "n/a");
            }
            if (method == "labels" || method == "all") {
                values["labels"] = mobius_via_labels(bottom, top);
                words.push_back(std::to_string(values["labels"].get<std::int64_t>()));
            }
            if (method == "recursion" || method == "all") {
                values["recursion"] = mobius_recursive(bottom, top);
                words.push_back(std::to_string(values["recursion"].get<std::int64_t>()));
            }
            bool agree = true;
            for (const auto& [k, v] : values.items())
                agree = agree && v == values.begin().value();
            if (format == "json")
                detail::emit(out, values);
            else {
                for (std::size_t i = 0; i < words.size(); ++i)
                    out << (i ? " " : "") << words[i];
                out << '\n';
            }
            if (!agree) {
                err << "error: methods disagree\n";
                return 1;
            }
            return 0;
        }

        if (qsym->parsed()) {
            detail::require_format(format, {"text", "json"});
            const auto a = parse_composition(comp, m);
            const unsigned N = positions ? positions : std::max(a.weight(), 1u);
            const auto p = fundamental_polynomial(a, N);
            if (format == "json")
                detail::emit(out, json(p));
            else
                for (const auto& [mono, c] : p.terms()) {
                    out << c;
                    for (const VarPower& vp : mono.powers()) {
                        out << " x[" << vp.var.color.index << ',' << vp.var.position << ']';
                        if (vp.exp > 1)
                            out << '^' << vp.exp;
                    }
                    out << '\n';
                }
            return 0;
        }

        if (verify->parsed()) {
            SweepResult r;
            if (bundle == "counting")
                r = verify_counting(m, n);
            else if (bundle == "covers")
                r = verify_covers(m, n);
            else if (bundle == "bijection")
                r = verify_bijection(m, n, max_size);
            else if (bundle == "pieri")
                r = verify_pieri_sweep(m, n);
            else if (bundle == "shuffle")
                r = verify_shuffle_sweep(m, n);
            else if (bundle == "cl")
                r = verify_cl_sweep(m, n);
            else if (bundle == "mobius")
                r = verify_mobius_sweep(m, n);
            else if (bundle == "truncated")
                r = verify_truncated(m, n);
            else if (bundle == "series")
                r = verify_series(m, n);
            else
                r = verify_subword_witness(m, n);
            detail::print_verify(out, bundle + " m=" + std::to_string(m) + " n=" + std::to_string(n), r);
            return r ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace colcomp::cli
