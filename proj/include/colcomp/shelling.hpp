#pragma once

// Urn-model chain labeling, lexicographically first chains, and the Möbius
// function of C^(m) by closed form, label counting, and recursion.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "poset.hpp"

namespace colcomp {

struct Move;

struct Urn {
    unsigned count = 0;
    std::optional<Color> color; // empty urns have no color

    friend bool operator==(const Urn&, const Urn&) = default;
};

/// A row of urns. Positions never shift: an urn that empties stays in place,
/// so labels keep referring to the original urn numbers.
class UrnState {
public:
    UrnState() = default;
    UrnState(unsigned m, std::vector<Urn> urns) : m_(m), urns_(std::move(urns)) {}

    unsigned colors() const noexcept { return m_; }
    std::span<const Urn> urns() const noexcept { return urns_; }
    std::size_t size() const noexcept { return urns_.size(); }

    unsigned balls() const noexcept
    {
        unsigned n = 0;
        for (const Urn& u : urns_)
            n += u.count;
        return n;
    }

    /// The composition read off left to right, skipping empty urns.
    ColoredComposition composition() const
    {
        std::vector<Part> parts;
        for (const Urn& u : urns_)
            if (u.count > 0)
                parts.push_back(Part{u.count, *u.color});
        return ColoredComposition(m_, std::move(parts));
    }

    friend bool operator==(const UrnState&, const UrnState&) = default;

private:
    friend std::vector<Move> legal_moves(const UrnState&);
    unsigned m_ = 1;
    std::vector<Urn> urns_;
};

/// (urn, move type), urns numbered from 1. Ordered lexicographically.
struct MoveLabel {
    unsigned urn = 1;
    unsigned type = 1;

    friend constexpr auto operator<=>(const MoveLabel&, const MoveLabel&) = default;
};

using Label = std::vector<MoveLabel>;

struct Move {
    MoveLabel label;
    UrnState next;
};

inline UrnState urns_of(const ColoredComposition& alpha)
{
    std::vector<Urn> urns;
    urns.reserve(alpha.length());
    for (const Part& p : alpha.parts())
        urns.push_back(Urn{p.size, p.color});
    return UrnState(alpha.colors(), std::move(urns));
}

/// Every legal move from `s`, in increasing label order. For a nonempty urn
/// U_i with nearest nonempty neighbours U_h (left) and U_j (right):
///   type 1: beta_i >= 2, or e_h != e_i, or U_i is the first nonempty urn;
///           remove one ball from U_i.
///   type 2: beta_i = 1 and e_h = e_j != e_i; remove the ball and pour U_h
///           and U_j into U_i.
///   type 3: beta_i >= 2 and e_j = e_i; pour U_j into U_i, remove one ball.
inline std::vector<Move> legal_moves(const UrnState& s)
{
    if (s.balls() == 0)
        throw std::invalid_argument("legal_moves: no balls left");
    const auto& urns = s.urns_;
    const std::size_t k = urns.size();
    std::vector<Move> out;
    for (std::size_t i = 0; i < k; ++i) {
        const Urn& ui = urns[i];
        if (ui.count == 0)
            continue;
        std::optional<std::size_t> h;
        std::optional<std::size_t> j;
        for (std::size_t t = i; t-- > 0;)
            if (urns[t].count > 0) {
                h = t;
                break;
            }
        for (std::size_t t = i + 1; t < k; ++t)
            if (urns[t].count > 0) {
                j = t;
                break;
            }
        const auto urn_no = static_cast<unsigned>(i + 1);

        if (ui.count >= 2 || !h || urns[*h].color != ui.color) {
            UrnState next = s;
            Urn& u = next.urns_[i];
            if (--u.count == 0)
                u.color.reset();
            out.push_back(Move{MoveLabel{urn_no, 1}, std::move(next)});
        }
        if (ui.count == 1 && h && j && urns[*h].color == urns[*j].color && urns[*h].color != ui.color) {
            UrnState next = s;
            next.urns_[i] = Urn{urns[*h].count + urns[*j].count, urns[*h].color};
            next.urns_[*h] = Urn{};
            next.urns_[*j] = Urn{};
            out.push_back(Move{MoveLabel{urn_no, 2}, std::move(next)});
        }
        if (ui.count >= 2 && j && urns[*j].color == ui.color) {
            UrnState next = s;
            next.urns_[i].count += urns[*j].count - 1;
            next.urns_[*j] = Urn{};
            out.push_back(Move{MoveLabel{urn_no, 3}, std::move(next)});
        }
    }
    return out;
}

/// Top-down chain with the urn states it passes through and its labels.
struct LabeledChain {
    Chain chain;
    std::vector<UrnState> states;
    Label label;
};

class LabelError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Labels a top-down saturated chain, starting from the urns of its top.
inline LabeledChain label_chain(std::span<const ColoredComposition> chain)
{
    if (chain.empty())
        throw LabelError("label_chain: empty chain");
    LabeledChain out;
    out.chain.assign(chain.begin(), chain.end());
    out.states.push_back(urns_of(chain.front()));
    for (std::size_t r = 1; r < chain.size(); ++r) {
        std::optional<Move> match;
        for (auto& mv : legal_moves(out.states.back())) {
            if (mv.next.composition() != chain[r])
                continue;
            if (match)
                throw std::logic_error("label_chain: two moves realize the same cover");
            match = std::move(mv);
        }
        if (!match)
            throw LabelError("no move takes " + render(chain[r - 1]) + " to " + render(chain[r]));
        out.label.push_back(match->label);
        out.states.push_back(std::move(match->next));
    }
    return out;
}

inline bool weakly_increasing(std::span<const MoveLabel> label)
{
    for (std::size_t i = 1; i < label.size(); ++i)
        if (label[i] < label[i - 1])
            return false;
    return true;
}

inline bool strictly_decreasing(std::span<const MoveLabel> label)
{
    for (std::size_t i = 1; i < label.size(); ++i)
        if (!(label[i] < label[i - 1]))
            return false;
    return true;
}

/// Greedy chain of [bottom, top]: at every state take the least-labelled move
/// that stays above `bottom`.
inline LabeledChain lex_first_chain(const ColoredComposition& bottom, const ColoredComposition& top)
{
    if (!less_or_equal(bottom, top))
        throw OrderError(render(bottom) + " is not below " + render(top));
    LabeledChain out;
    out.chain.push_back(top);
    out.states.push_back(urns_of(top));
    while (out.chain.back().weight() > bottom.weight()) {
        bool moved = false;
        for (auto& mv : legal_moves(out.states.back())) {
            ColoredComposition next = mv.next.composition();
            if (!less_or_equal(bottom, next))
                continue;
            out.chain.push_back(std::move(next));
            out.label.push_back(mv.label);
            out.states.push_back(std::move(mv.next));
            moved = true;
            break;
        }
        if (!moved)
            throw std::logic_error("lex_first_chain: no move stays inside the interval");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Möbius function
// ---------------------------------------------------------------------------

/// (-1)^|alpha| when alpha is all singletons with consecutive colors
/// distinct, 0 otherwise (1 for the empty composition).
inline std::int64_t mobius_closed_form(const ColoredComposition& alpha)
{
    for (std::size_t i = 0; i < alpha.length(); ++i) {
        if (alpha[i].size != 1)
            return 0;
        if (i > 0 && alpha[i - 1].color == alpha[i].color)
            return 0;
    }
    return alpha.weight() % 2 == 0 ? 1 : -1;
}

/// Number of maximal chains of [bottom, top] whose label strictly decreases.
/// Prefixes that stop decreasing are abandoned.
inline std::uint64_t count_strictly_decreasing_chains(const ColoredComposition& bottom, const ColoredComposition& top)
{
    if (!less_or_equal(bottom, top))
        throw OrderError(render(bottom) + " is not below " + render(top));
    const unsigned floor = bottom.weight();
    std::uint64_t found = 0;
    std::function<void(const UrnState&, unsigned, std::optional<MoveLabel>)> walk =
        [&](const UrnState& s, unsigned rank, std::optional<MoveLabel> last) {
            if (rank == floor) {
                ++found;
                return;
            }
            for (const auto& mv : legal_moves(s)) {
                if (last && !(mv.label < *last))
                    continue;
                if (!less_or_equal(bottom, mv.next.composition()))
                    continue;
                walk(mv.next, rank - 1, mv.label);
            }
        };
    walk(urns_of(top), top.weight(), std::nullopt);
    return found;
}

/// (-1)^(|top|-|bottom|) times the number of strictly decreasing chains.
inline std::int64_t mobius_via_labels(const ColoredComposition& bottom, const ColoredComposition& top)
{
    const auto n = static_cast<std::int64_t>(count_strictly_decreasing_chains(bottom, top));
    return (top.weight() - bottom.weight()) % 2 == 0 ? n : -n;
}

/// mu(bottom, top) from mu(x,x) = 1, mu(x,y) = -sum_{x <= z < y} mu(x,z),
/// evaluated over the interval.
inline std::int64_t mobius_recursive(const ColoredComposition& bottom, const ColoredComposition& top)
{
    const Interval iv = interval(bottom, top);
    std::map<ColoredComposition, std::int64_t> mu;
    mu[bottom] = 1;
    for (std::size_t r = 1; r < iv.by_rank.size(); ++r)
        for (const auto& g : iv.by_rank[r]) {
            const Downset& below = thread_downset_cache().of(g);
            std::int64_t sum = 0;
            for (std::size_t q = 0; q < r; ++q)
                for (const auto& z : iv.by_rank[q])
                    if (below.contains(z))
                        sum = detail::checked_add(sum, mu.at(z));
            mu[g] = -sum;
        }
    return mu.at(top);
}

/// mu(bottom, g) for every g >= bottom with |g| <= max_rank, by the same
/// recursion as mobius_recursive, shared across all tops.
inline std::map<ColoredComposition, std::int64_t> mobius_upward_table(const ColoredComposition& bottom,
                                                                      unsigned max_rank)
{
    std::map<ColoredComposition, std::int64_t> mu;
    if (bottom.weight() > max_rank)
        return mu;
    mu[bottom] = 1;
    CompositionSet level{bottom};
    for (unsigned rank = bottom.weight() + 1; rank <= max_rank; ++rank) {
        CompositionSet next;
        for (const auto& g : level)
            for (auto&& up : up_covers(g))
                next.insert(up);
        for (const auto& g : next) {
            const Downset& below = thread_downset_cache().of(g);
            std::int64_t sum = 0;
            for (unsigned q = bottom.weight(); q < rank; ++q)
                for (const auto& z : below.by_rank[q]) {
                    auto it = mu.find(z);
                    if (it != mu.end())
                        sum = detail::checked_add(sum, it->second);
                }
            mu[g] = -sum;
        }
        level = std::move(next);
    }
    return mu;
}

struct TruncatedMobius {
    std::int64_t value = 0;    // by recursion
    std::int64_t expected = 0; // (-1)^(n+1) (m-1)^n
    bool agrees() const noexcept { return value == expected; }
};

inline std::int64_t truncated_mobius_formula(unsigned m, unsigned n)
{
    std::int64_t p = 1;
    for (unsigned i = 0; i < n; ++i)
        p = detail::checked_mul(p, static_cast<std::int64_t>(m) - 1);
    return n % 2 == 1 ? p : -p;
}

/// mu(empty, 1^) in ranks 0..n with a new top 1^ above all of rank n.
/// Every element of rank <= n lies below 1^, so mu(empty, 1^) is minus the
/// sum of mu(empty, x) over those ranks.
inline TruncatedMobius truncated_mobius(unsigned m, unsigned n, std::uint64_t max_elements = 200'000)
{
    if (m == 0 || n == 0)
        throw std::invalid_argument("truncated_mobius: need m >= 1 and n >= 1");
    std::uint64_t elements = 0;
    for (unsigned r = 0; r <= n; ++r)
        elements = detail::checked_add(elements, count_compositions(m, r));
    if (elements > max_elements)
        throw std::domain_error("truncated_mobius: " + std::to_string(elements) + " elements exceed the size guard");
    const auto mu = mobius_upward_table(ColoredComposition(m), n);
    std::int64_t sum = 0;
    for (const auto& [x, v] : mu)
        sum = detail::checked_add(sum, v);
    return TruncatedMobius{-sum, truncated_mobius_formula(m, n)};
}

struct MobiusSeries {
    std::vector<std::int64_t> signed_coefficients;    // sum of mu(empty, alpha) over |alpha| = n
    std::vector<std::uint64_t> unsigned_coefficients; // sum of |mu(empty, alpha)|
};

/// Coefficients for n = 0..n_max, from the closed form over all compositions.
inline MobiusSeries mobius_series(unsigned m, unsigned n_max)
{
    if (m < 2)
        throw std::invalid_argument("mobius_series: needs m >= 2");
    MobiusSeries s;
    for (unsigned n = 0; n <= n_max; ++n) {
        std::int64_t sgn = 0;
        std::uint64_t abs = 0;
        for (const auto& a : enumerate_compositions(m, n)) {
            const std::int64_t mu = mobius_closed_form(a);
            sgn += mu;
            abs += static_cast<std::uint64_t>(mu < 0 ? -mu : mu);
        }
        s.signed_coefficients.push_back(sgn);
        s.unsigned_coefficients.push_back(abs);
    }
    return s;
}

} // namespace colcomp
