#pragma once

// Colored compositions and colored permutations: the value types every other
// header builds on, their canonical text grammar, and exhaustive enumeration.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace colcomp {

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("colcomp: 64-bit count overflow");
    return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("colcomp: 64-bit count overflow");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("colcomp: 64-bit coefficient overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("colcomp: 64-bit coefficient overflow");
    return r;
}

} // namespace detail

/// A color is stored as the exponent j of omega^j, 0 <= j < m.
struct Color {
    unsigned index = 0;

    friend constexpr auto operator<=>(Color, Color) = default;
};

struct Part {
    unsigned size = 1;
    Color color;

    friend constexpr bool operator==(const Part&, const Part&) = default;
};

/// An m-colored composition. Immutable; validated on construction.
///
/// Ordering is (m, part sizes lexicographically, part colors
/// lexicographically), which is also the order `enumerate_compositions`
/// produces.
class ColoredComposition {
public:
    ColoredComposition() = default;

    explicit ColoredComposition(unsigned m, std::vector<Part> parts = {})
      : m_(m), parts_(std::move(parts))
    {
        if (m_ == 0)
            throw std::invalid_argument("colored composition: m must be >= 1");
        for (const Part& p : parts_) {
            if (p.size == 0)
                throw std::invalid_argument("colored composition: part of size 0");
            if (p.color.index >= m_)
                throw std::invalid_argument("colored composition: color index >= m");
            weight_ = static_cast<unsigned>(detail::checked_add(std::uint64_t{weight_}, std::uint64_t{p.size}));
        }
    }

    unsigned colors() const noexcept { return m_; }
    std::span<const Part> parts() const noexcept { return parts_; }
    const Part& operator[](std::size_t i) const { return parts_[i]; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Sum of the part sizes (the rank in the poset).
    unsigned weight() const noexcept { return weight_; }

    friend bool operator==(const ColoredComposition& a, const ColoredComposition& b) noexcept
    {
        return a.m_ == b.m_ && a.parts_ == b.parts_;
    }

    friend std::strong_ordering operator<=>(const ColoredComposition& a,
                                            const ColoredComposition& b) noexcept
    {
        if (auto c = a.m_ <=> b.m_; c != 0)
            return c;
        auto by_size = std::lexicographical_compare_three_way(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
            [](const Part& x, const Part& y) { return x.size <=> y.size; });
        if (by_size != 0)
            return by_size;
        return std::lexicographical_compare_three_way(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
            [](const Part& x, const Part& y) { return x.color <=> y.color; });
    }

private:
    unsigned m_ = 1;
    std::vector<Part> parts_;
    unsigned weight_ = 0;
};

inline unsigned weight(const ColoredComposition& a) noexcept { return a.weight(); }

/// One letter omega^color * value of a colored word.
struct Letter {
    unsigned value = 1;
    Color color;

    friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// An element of C_m wr S_n, written as a word whose absolute values are a
/// permutation of 1..n.
class ColoredPermutation {
public:
    ColoredPermutation() = default;

    explicit ColoredPermutation(unsigned m, std::vector<Letter> letters = {})
      : m_(m), letters_(std::move(letters))
    {
        if (m_ == 0)
            throw std::invalid_argument("colored permutation: m must be >= 1");
        std::vector<bool> seen(letters_.size() + 1, false);
        for (const Letter& l : letters_) {
            if (l.color.index >= m_)
                throw std::invalid_argument("colored permutation: color index >= m");
            if (l.value == 0 || l.value > letters_.size() || seen[l.value])
                throw std::invalid_argument("colored permutation: values are not a permutation of 1..n");
            seen[l.value] = true;
        }
    }

    unsigned colors() const noexcept { return m_; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    std::size_t size() const noexcept { return letters_.size(); }

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
    friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

private:
    unsigned m_ = 1;
    std::vector<Letter> letters_;
};

// ---------------------------------------------------------------------------
// Counting and enumeration
// ---------------------------------------------------------------------------

/// m(m+1)^(n-1) for n >= 1 and 1 for n = 0. Throws std::overflow_error when
/// the count does not fit in 64 bits.
inline std::uint64_t count_compositions(unsigned m, unsigned n)
{
    if (m == 0)
        throw std::invalid_argument("count_compositions: m must be >= 1");
    if (n == 0)
        return 1;
    std::uint64_t r = m;
    for (unsigned i = 1; i < n; ++i)
        r = detail::checked_mul(r, std::uint64_t{m} + 1);
    return r;
}

namespace detail {

inline void ordinary_compositions(unsigned rest, std::vector<unsigned>& prefix,
                                  std::vector<std::vector<unsigned>>& out)
{
    if (rest == 0) {
        out.push_back(prefix);
        return;
    }
    for (unsigned first = 1; first <= rest; ++first) {
        prefix.push_back(first);
        ordinary_compositions(rest - first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// Ordinary compositions of n, lexicographic in the part sequence.
inline std::vector<std::vector<unsigned>> ordinary_compositions(unsigned n)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> prefix;
    detail::ordinary_compositions(n, prefix, out);
    return out;
}

/// All m-colored compositions of n, each once, in canonical order: ordinary
/// shapes lexicographically, then colorings lexicographically.
inline std::vector<ColoredComposition> enumerate_compositions(unsigned m, unsigned n)
{
    const std::uint64_t total = count_compositions(m, n);
    std::vector<ColoredComposition> out;
    out.reserve(static_cast<std::size_t>(total));
    for (const auto& shape : ordinary_compositions(n)) {
        std::vector<unsigned> colors(shape.size(), 0);
        for (;;) {
            std::vector<Part> parts(shape.size());
            for (std::size_t i = 0; i < shape.size(); ++i)
                parts[i] = Part{shape[i], Color{colors[i]}};
            out.emplace_back(m, std::move(parts));

            // odometer, last coordinate fastest
            std::size_t i = colors.size();
            while (i > 0 && colors[i - 1] + 1 == m)
                colors[--i] = 0;
            if (i == 0)
                break;
            ++colors[i - 1];
        }
    }
    return out;
}

/// All compositions of weight 0..n_max, rank by rank.
inline std::vector<std::vector<ColoredComposition>> enumerate_ranks(unsigned m, unsigned n_max)
{
    std::vector<std::vector<ColoredComposition>> out;
    for (unsigned n = 0; n <= n_max; ++n)
        out.push_back(enumerate_compositions(m, n));
    return out;
}

/// All m^n n! colored permutations of [n]: permutations in lexicographic
/// order, and for each, colorings in lexicographic order.
inline std::vector<ColoredPermutation> enumerate_permutations(unsigned m, unsigned n)
{
    if (m == 0)
        throw std::invalid_argument("enumerate_permutations: m must be >= 1");
    std::vector<ColoredPermutation> out;
    std::vector<unsigned> values(n);
    std::iota(values.begin(), values.end(), 1u);
    do {
        std::vector<unsigned> colors(n, 0);
        for (;;) {
            std::vector<Letter> letters(n);
            for (unsigned i = 0; i < n; ++i)
                letters[i] = Letter{values[i], Color{colors[i]}};
            out.emplace_back(m, std::move(letters));
            std::size_t i = colors.size();
            while (i > 0 && colors[i - 1] + 1 == m)
                colors[--i] = 0;
            if (i == 0)
                break;
            ++colors[i - 1];
        }
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Canonical text grammar
//
//   composition := "" | part ("," part)*        part   := size "c" color
//   permutation := "" | letter ("," letter)*    letter := value "c" color
// ---------------------------------------------------------------------------

enum class ParseErrorKind {
    malformed,
    color_out_of_range,
    zero_part,
    not_a_permutation,
};

class ParseError : public std::invalid_argument {
public:
    ParseError(ParseErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind)
    {
    }

    ParseErrorKind kind() const noexcept { return kind_; }

private:
    ParseErrorKind kind_;
};

namespace detail {

inline unsigned parse_number(std::string_view tok, std::string_view whole)
{
    // canonical decimal: no sign, no leading zeros
    if (tok.empty() || (tok.size() > 1 && tok.front() == '0'))
        throw ParseError(ParseErrorKind::malformed, "malformed token in \"" + std::string(whole) + "\"");
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(ParseErrorKind::malformed, "malformed token in \"" + std::string(whole) + "\"");
    return v;
}

// Splits "a c b, ..." into (a, b) pairs without range checks.
inline std::vector<std::pair<unsigned, unsigned>> parse_pairs(std::string_view text)
{
    std::vector<std::pair<unsigned, unsigned>> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                    : comma - start);
        std::size_t c = item.find('c');
        if (c == std::string_view::npos)
            throw ParseError(ParseErrorKind::malformed, "missing 'c' in \"" + std::string(item) + "\"");
        out.emplace_back(parse_number(item.substr(0, c), text), parse_number(item.substr(c + 1), text));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace detail

inline ColoredComposition parse_composition(std::string_view text, unsigned m)
{
    if (m == 0)
        throw std::invalid_argument("parse_composition: m must be >= 1");
    std::vector<Part> parts;
    for (auto [size, color] : detail::parse_pairs(text)) {
        if (size == 0)
            throw ParseError(ParseErrorKind::zero_part, "part of size 0 in \"" + std::string(text) + "\"");
        if (color >= m)
            throw ParseError(ParseErrorKind::color_out_of_range,
                             "color " + std::to_string(color) + " out of range for m=" + std::to_string(m));
        parts.push_back(Part{size, Color{color}});
    }
    return ColoredComposition(m, std::move(parts));
}

inline ColoredPermutation parse_permutation(std::string_view text, unsigned m)
{
    if (m == 0)
        throw std::invalid_argument("parse_permutation: m must be >= 1");
    std::vector<Letter> letters;
    for (auto [value, color] : detail::parse_pairs(text)) {
        if (color >= m)
            throw ParseError(ParseErrorKind::color_out_of_range,
                             "color " + std::to_string(color) + " out of range for m=" + std::to_string(m));
        letters.push_back(Letter{value, Color{color}});
    }
    std::vector<bool> seen(letters.size() + 1, false);
    for (const Letter& l : letters) {
        if (l.value == 0 || l.value > letters.size() || seen[l.value])
            throw ParseError(ParseErrorKind::not_a_permutation,
                             "values of \"" + std::string(text) + "\" are not a permutation of 1..n");
        seen[l.value] = true;
    }
    return ColoredPermutation(m, std::move(letters));
}

inline std::string render(const ColoredComposition& a)
{
    std::string out;
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(a[i].size);
        out += 'c';
        out += std::to_string(a[i].color.index);
    }
    return out;
}

inline std::string render(std::span<const Letter> word)
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(word[i].value);
        out += 'c';
        out += std::to_string(word[i].color.index);
    }
    return out;
}

inline std::string render(const ColoredPermutation& u) { return render(u.letters()); }

/// Human-oriented rendering: bars for m = 2 (U+0304 combining macron),
/// "w^j" prefixes otherwise, "∅" for the empty composition.
inline std::string render_pretty(const ColoredComposition& a)
{
    if (a.empty())
        return "∅";
    std::string out = "(";
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (i)
            out += ", ";
        const unsigned j = a[i].color.index;
        if (a.colors() == 2) {
            out += std::to_string(a[i].size);
            if (j == 1)
                out += "̄";
        } else {
            if (j == 1)
                out += "w";
            else if (j > 1)
                out += "w^" + std::to_string(j);
            out += std::to_string(a[i].size);
        }
    }
    return out + ")";
}

} // namespace colcomp
