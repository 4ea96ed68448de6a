#pragma once

// Colored permutations, descent statistics, and the bijection between
// C_m wr S_n and saturated chains from the empty composition to rank n.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "poset.hpp"

namespace colcomp {

/// Descent composition of a word of distinct integers, as an m = 1
/// composition: the lengths of the maximal increasing runs.
inline ColoredComposition descent_composition(std::span<const unsigned> w)
{
    std::set<unsigned> seen(w.begin(), w.end());
    if (seen.size() != w.size())
        throw std::invalid_argument("descent_composition: repeated letters");
    std::vector<Part> parts;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i == 0 || w[i - 1] > w[i])
            parts.push_back(Part{1, Color{0}});
        else
            ++parts.back().size;
    }
    return ColoredComposition(1, std::move(parts));
}

/// Des(w) = { i : w_i > w_{i+1} }, 1-based.
inline std::set<unsigned> descent_set(std::span<const unsigned> w)
{
    std::set<unsigned> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1])
            out.insert(static_cast<unsigned>(i + 1));
    return out;
}

/// Partial sums a_1, a_1+a_2, ..., excluding the full sum.
inline std::set<unsigned> descent_set(const ColoredComposition& c)
{
    std::set<unsigned> out;
    unsigned s = 0;
    for (std::size_t i = 0; i + 1 < c.length(); ++i)
        out.insert(s += c[i].size);
    return out;
}

struct DescentData {
    std::set<unsigned> descent_set;
    ColoredComposition descent_composition;
};

/// Maximal constant-color blocks of a colored word. Adjacent parts of the
/// result always have distinct colors.
inline ColoredComposition color_composition(std::span<const Letter> u, unsigned m)
{
    std::vector<Part> parts;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i == 0 || u[i - 1].color != u[i].color)
            parts.push_back(Part{1, u[i].color});
        else
            ++parts.back().size;
    }
    return ColoredComposition(m, std::move(parts));
}

inline ColoredComposition color_composition(const ColoredPermutation& u)
{
    return color_composition(u.letters(), u.colors());
}

/// Increasing runs of constant color, recorded with their color. Accepts any
/// word of distinct values (it need not be a permutation of 1..n).
inline ColoredComposition colored_descent_composition(std::span<const Letter> u, unsigned m)
{
    std::vector<Part> parts;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i == 0 || u[i - 1].color != u[i].color || u[i - 1].value > u[i].value)
            parts.push_back(Part{1, u[i].color});
        else
            ++parts.back().size;
    }
    return ColoredComposition(m, std::move(parts));
}

inline ColoredComposition colored_descent_composition(const ColoredPermutation& u)
{
    return colored_descent_composition(u.letters(), u.colors());
}

/// u[i]: the subword of letters with value <= i.
inline ColoredPermutation restrict(const ColoredPermutation& u, std::size_t i)
{
    if (i > u.size())
        throw std::out_of_range("restrict: i exceeds the length of the permutation");
    std::vector<Letter> kept;
    for (const Letter& l : u.letters())
        if (l.value <= i)
            kept.push_back(l);
    return ColoredPermutation(u.colors(), std::move(kept));
}

/// The saturated chain (empty, C(u[1]), ..., C(u[n])), bottom first.
inline Chain chain_of_permutation(const ColoredPermutation& u)
{
    Chain out;
    out.reserve(u.size() + 1);
    for (std::size_t i = 0; i <= u.size(); ++i)
        out.push_back(colored_descent_composition(restrict(u, i)));
    return out;
}

/// Colored descent composition of u with the new maximum value inserted at
/// letter position `pos` (0..n) with color `color`, computed from
/// alpha = C(u) alone. The four cases: at a run boundary b_s the new letter
/// extends part s when it shares its color and starts a new part otherwise;
/// strictly inside part s+1 it splits that part, with or without a new
/// singleton of its own color between the halves.
inline ColoredComposition insertion_cover(const ColoredComposition& alpha, unsigned pos, Color color)
{
    const unsigned m = alpha.colors();
    if (color.index >= m)
        throw std::invalid_argument("insertion_cover: color index >= m");
    if (pos > alpha.weight())
        throw std::invalid_argument("insertion_cover: position past the end");
    unsigned boundary = 0; // b_s
    for (std::size_t s = 0; s <= alpha.length(); ++s) {
        if (pos == boundary) {
            if (s >= 1 && alpha[s - 1].color == color)
                return detail::splice(alpha, s - 1, s, {Part{alpha[s - 1].size + 1, color}});
            return detail::splice(alpha, s, s, {Part{1, color}});
        }
        if (s == alpha.length())
            break;
        const Part next = alpha[s];
        if (pos < boundary + next.size) {
            const unsigned h = pos - boundary; // 1 <= h <= size-1
            if (next.color == color)
                return detail::splice(alpha, s, s + 1, {Part{h + 1, color}, Part{next.size - h, color}});
            return detail::splice(alpha, s, s + 1, {Part{h, next.color}, Part{1, color}, Part{next.size - h, next.color}});
        }
        boundary += next.size;
    }
    throw std::logic_error("insertion_cover: unreachable");
}

/// Why a chain could not be turned back into a permutation.
enum class ChainErrorKind {
    not_anchored,  // first element is not the empty composition
    not_saturated, // a step does not raise the weight by exactly one, or mixes m
    no_cover_case, // a step is no cover of the previous element
};

class ChainError : public std::domain_error {
public:
    ChainError(ChainErrorKind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
    ChainErrorKind kind() const noexcept { return kind_; }

private:
    ChainErrorKind kind_;
};

/// Inverse of chain_of_permutation. `chain` is bottom first, starting at the
/// empty composition. Each step is classified into its unique (position,
/// color) insertion; letter i is inserted there.
inline ColoredPermutation permutation_of_chain(std::span<const ColoredComposition> chain)
{
    if (chain.empty() || !chain.front().empty())
        throw ChainError(ChainErrorKind::not_anchored, "chain does not start at the empty composition");
    const unsigned m = chain.front().colors();
    std::vector<Letter> word;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const ColoredComposition& prev = chain[i - 1];
        const ColoredComposition& next = chain[i];
        if (next.colors() != m || next.weight() != prev.weight() + 1)
            throw ChainError(ChainErrorKind::not_saturated,
                             "step " + std::to_string(i) + " is not a rank-one step");
        std::optional<std::pair<unsigned, Color>> found;
        for (unsigned pos = 0; pos <= prev.weight(); ++pos)
            for (unsigned c = 0; c < m; ++c)
                if (insertion_cover(prev, pos, Color{c}) == next) {
                    if (found)
                        throw std::logic_error("permutation_of_chain: ambiguous cover classification");
                    found.emplace(pos, Color{c});
                }
        if (!found)
            throw ChainError(ChainErrorKind::no_cover_case,
                             render(next) + " does not cover " + render(prev));
        word.insert(word.begin() + found->first, Letter{static_cast<unsigned>(i), found->second});
    }
    return ColoredPermutation(m, std::move(word));
}

/// Factorial-scale enumeration refused beyond this many permutations unless
/// the caller raises the bound.
inline constexpr std::uint64_t default_max_permutations = 20'000'000;

/// m^n n!, or std::overflow_error.
inline std::uint64_t count_permutations(unsigned m, unsigned n)
{
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= n; ++i)
        r = detail::checked_mul(detail::checked_mul(r, m), i);
    return r;
}

class SizeGuardError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// f_n^(m)(alpha) for every alpha of weight n, by brute force over C_m wr S_n.
inline std::map<ColoredComposition, std::uint64_t>
count_by_descent_composition(unsigned m, unsigned n, std::uint64_t max_size = default_max_permutations)
{
    if (m == 0)
        throw std::invalid_argument("count_by_descent_composition: m must be >= 1");
    if (count_permutations(m, n) > max_size)
        throw SizeGuardError("m^n n! = " + std::to_string(count_permutations(m, n))
                             + " exceeds the size guard " + std::to_string(max_size));
    std::map<ColoredComposition, std::uint64_t> tally;
    for (const auto& u : enumerate_permutations(m, n))
        ++tally[colored_descent_composition(u)];
    return tally;
}

} // namespace colcomp
