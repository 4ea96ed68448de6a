#pragma once

// JSON forms of the library's values (nlohmann/json).
//
//   composition  {"m": 2, "parts":   [{"size": 2, "color": 0}, ...]}
//   permutation  {"m": 2, "letters": [{"value": 2, "color": 1}, ...]}
//   chain        [composition, ...]                 top first
//   labeled      {"chain": [...], "label": [[urn, type], ...]}
//   polynomial   [{"coef": c, "vars": [{"color": j, "pos": i, "exp": e}, ...]}, ...]

#include <string>
#include <vector>

#include "json.hpp"

#include "core.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "shelling.hpp"

namespace colcomp {

using nlohmann::json;

inline void to_json(json& j, const ColoredComposition& a)
{
    json parts = json::array();
    for (const Part& p : a.parts())
        parts.push_back({{"size", p.size}, {"color", p.color.index}});
    j = json{{"m", a.colors()}, {"parts", std::move(parts)}};
}

inline void to_json(json& j, const ColoredPermutation& u)
{
    json letters = json::array();
    for (const Letter& l : u.letters())
        letters.push_back({{"value", l.value}, {"color", l.color.index}});
    j = json{{"m", u.colors()}, {"letters", std::move(letters)}};
}

inline void to_json(json& j, const MoveLabel& l) { j = json::array({l.urn, l.type}); }

inline void to_json(json& j, const LabeledChain& c)
{
    j = json{{"chain", c.chain}, {"label", c.label}};
}

inline void to_json(json& j, const SparsePolynomial& p)
{
    j = json::array();
    for (const auto& [mono, coef] : p.terms()) {
        json vars = json::array();
        for (const VarPower& vp : mono.powers())
            vars.push_back({{"color", vp.var.color.index}, {"pos", vp.var.position}, {"exp", vp.exp}});
        j.push_back({{"coef", coef}, {"vars", std::move(vars)}});
    }
}

namespace detail {

inline unsigned json_unsigned(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_unsigned())
        throw ParseError(ParseErrorKind::malformed, std::string("JSON: missing or non-unsigned \"") + key + "\"");
    return j.at(key).get<unsigned>();
}

} // namespace detail

/// Validating reader; shape problems become ParseError like the text grammar.
inline ColoredComposition composition_from_json(const json& j)
{
    const unsigned m = detail::json_unsigned(j, "m");
    if (m == 0)
        throw ParseError(ParseErrorKind::malformed, "JSON: m must be >= 1");
    if (!j.contains("parts") || !j.at("parts").is_array())
        throw ParseError(ParseErrorKind::malformed, "JSON: composition needs a \"parts\" array");
    std::vector<Part> parts;
    for (const json& p : j.at("parts")) {
        const unsigned size = detail::json_unsigned(p, "size");
        const unsigned color = detail::json_unsigned(p, "color");
        if (size == 0)
            throw ParseError(ParseErrorKind::zero_part, "JSON: part of size 0");
        if (color >= m)
            throw ParseError(ParseErrorKind::color_out_of_range, "JSON: color out of range");
        parts.push_back(Part{size, Color{color}});
    }
    return ColoredComposition(m, std::move(parts));
}

inline ColoredPermutation permutation_from_json(const json& j)
{
    const unsigned m = detail::json_unsigned(j, "m");
    if (m == 0)
        throw ParseError(ParseErrorKind::malformed, "JSON: m must be >= 1");
    if (!j.contains("letters") || !j.at("letters").is_array())
        throw ParseError(ParseErrorKind::malformed, "JSON: permutation needs a \"letters\" array");
    std::vector<Letter> letters;
    for (const json& l : j.at("letters")) {
        const unsigned color = detail::json_unsigned(l, "color");
        if (color >= m)
            throw ParseError(ParseErrorKind::color_out_of_range, "JSON: color out of range");
        letters.push_back(Letter{detail::json_unsigned(l, "value"), Color{color}});
    }
    try {
        return ColoredPermutation(m, std::move(letters));
    } catch (const std::invalid_argument& e) {
        throw ParseError(ParseErrorKind::not_a_permutation, e.what());
    }
}

inline Chain chain_from_json(const json& j)
{
    if (!j.is_array())
        throw ParseError(ParseErrorKind::malformed, "JSON: chain must be an array");
    Chain out;
    for (const json& c : j)
        out.push_back(composition_from_json(c));
    return out;
}

} // namespace colcomp
