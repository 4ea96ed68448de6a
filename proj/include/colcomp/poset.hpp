#pragma once

// Order structure of the m-colored composition poset.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace colcomp {

using CompositionSet = std::set<ColoredComposition>;

/// A saturated chain. Direction is stated by whoever produces it.
using Chain = std::vector<ColoredComposition>;

/// Raised when an operation needs beta <= alpha and it does not hold.
class OrderError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

// Copy of a's parts with parts [first, last) replaced by `with` (size-0
// entries dropped).
inline ColoredComposition splice(const ColoredComposition& a, std::size_t first, std::size_t last,
                                 std::initializer_list<Part> with)
{
    std::vector<Part> parts;
    parts.reserve(a.length() + with.size());
    parts.insert(parts.end(), a.parts().begin(), a.parts().begin() + first);
    for (const Part& p : with)
        if (p.size > 0)
            parts.push_back(p);
    parts.insert(parts.end(), a.parts().begin() + last, a.parts().end());
    return ColoredComposition(a.colors(), std::move(parts));
}

} // namespace detail

/// Every beta covering alpha.
///
/// Part j of size a and color e is replaced by
///   (1) e(a+1),
///   (2) e(h+1), e(a-h)          for 0 <= h <= a-1,
///   (3) e h, e'1, e(a-h)        for e' != e, 0 <= h <= a,
/// dropping parts of size 0; the empty composition is covered by the m
/// single parts. Type (3) runs up to h = a so that a new part can be
/// appended after the last part. The result always has m(|alpha|+1) elements.
inline CompositionSet up_covers(const ColoredComposition& alpha)
{
    const unsigned m = alpha.colors();
    CompositionSet out;
    if (alpha.empty()) {
        for (unsigned c = 0; c < m; ++c)
            out.insert(ColoredComposition(m, {Part{1, Color{c}}}));
        return out;
    }
    for (std::size_t j = 0; j < alpha.length(); ++j) {
        const unsigned a = alpha[j].size;
        const Color e = alpha[j].color;
        out.insert(detail::splice(alpha, j, j + 1, {Part{a + 1, e}}));
        for (unsigned h = 0; h < a; ++h)
            out.insert(detail::splice(alpha, j, j + 1, {Part{h + 1, e}, Part{a - h, e}}));
        for (unsigned c = 0; c < m; ++c) {
            if (Color{c} == e)
                continue;
            for (unsigned h = 0; h <= a; ++h)
                out.insert(detail::splice(alpha, j, j + 1, {Part{h, e}, Part{1, Color{c}}, Part{a - h, e}}));
        }
    }
    return out;
}

/// Every alpha covered by beta, by inverting the three cover rules directly.
inline CompositionSet down_covers(const ColoredComposition& beta)
{
    CompositionSet out;
    const std::size_t k = beta.length();
    for (std::size_t j = 0; j < k; ++j) {
        const Part p = beta[j];
        // inverse of (1)
        if (p.size >= 2)
            out.insert(detail::splice(beta, j, j + 1, {Part{p.size - 1, p.color}}));
        // inverse of (2): merge (e(h+1), e(a-h)) back into e a
        if (j + 1 < k && beta[j + 1].color == p.color)
            out.insert(detail::splice(beta, j, j + 2, {Part{p.size + beta[j + 1].size - 1, p.color}}));
        // inverse of (3): delete a singleton e'1
        if (p.size == 1) {
            const bool has_left = j > 0;
            const bool has_right = j + 1 < k;
            if (has_left && has_right && beta[j - 1].color == beta[j + 1].color
                && beta[j - 1].color != p.color)
                out.insert(detail::splice(beta, j - 1, j + 2,
                                          {Part{beta[j - 1].size + beta[j + 1].size, beta[j - 1].color}}));
            const bool from_left = has_left && beta[j - 1].color != p.color;
            const bool from_right = has_right && beta[j + 1].color != p.color;
            if (from_left || from_right || k == 1)
                out.insert(detail::splice(beta, j, j + 1, {}));
        }
    }
    return out;
}

/// The down-set of a composition, indexed by rank 0..|top|.
struct Downset {
    std::vector<CompositionSet> by_rank;

    bool contains(const ColoredComposition& a) const
    {
        return a.weight() < by_rank.size() && by_rank[a.weight()].contains(a);
    }
};

inline Downset compute_downset(const ColoredComposition& top)
{
    Downset d;
    d.by_rank.resize(top.weight() + 1);
    d.by_rank[top.weight()].insert(top);
    for (unsigned r = top.weight(); r > 0; --r)
        for (const auto& x : d.by_rank[r])
            for (auto&& y : down_covers(x))
                d.by_rank[r - 1].insert(y);
    return d;
}

/// Memo of down-sets keyed by their top element. Not synchronized; keep one
/// per thread.
class DownsetCache {
public:
    const Downset& of(const ColoredComposition& top)
    {
        auto it = cache_.find(top);
        if (it == cache_.end())
            it = cache_.emplace(top, std::make_unique<Downset>(compute_downset(top))).first;
        return *it->second;
    }

    std::size_t size() const noexcept { return cache_.size(); }
    void clear() { cache_.clear(); }

private:
    std::map<ColoredComposition, std::unique_ptr<Downset>> cache_;
};

inline DownsetCache& thread_downset_cache()
{
    thread_local DownsetCache cache;
    return cache;
}

inline void require_same_colors(const ColoredComposition& a, const ColoredComposition& b)
{
    if (a.colors() != b.colors())
        throw std::invalid_argument("compositions from different posets (m=" + std::to_string(a.colors())
                                    + " vs m=" + std::to_string(b.colors()) + ")");
}

/// alpha <= beta in C^(m). Uses the calling thread's down-set cache.
inline bool less_or_equal(const ColoredComposition& alpha, const ColoredComposition& beta)
{
    require_same_colors(alpha, beta);
    if (alpha.weight() > beta.weight())
        return false;
    if (alpha.weight() == beta.weight())
        return alpha == beta;
    return thread_downset_cache().of(beta).contains(alpha);
}

/// The closed interval [bottom, top] organised by rank. `by_rank[i]` holds
/// the elements of weight |bottom| + i.
struct Interval {
    ColoredComposition bottom;
    ColoredComposition top;
    std::vector<CompositionSet> by_rank;

    unsigned length() const noexcept { return top.weight() - bottom.weight(); }

    bool contains(const ColoredComposition& g) const
    {
        if (g.colors() != top.colors() || g.weight() < bottom.weight() || g.weight() > top.weight())
            return false;
        return by_rank[g.weight() - bottom.weight()].contains(g);
    }

    std::size_t size() const
    {
        std::size_t n = 0;
        for (const auto& r : by_rank)
            n += r.size();
        return n;
    }
};

/// [bottom, top]: the down-set of top intersected with the elements reachable
/// upward from bottom.
inline Interval interval(const ColoredComposition& bottom, const ColoredComposition& top)
{
    require_same_colors(bottom, top);
    if (!less_or_equal(bottom, top))
        throw OrderError(render(bottom) + " is not below " + render(top));
    const Downset& below_top = thread_downset_cache().of(top);
    Interval iv{bottom, top, {}};
    iv.by_rank.resize(top.weight() - bottom.weight() + 1);
    iv.by_rank[0].insert(bottom);
    for (std::size_t i = 0; i + 1 < iv.by_rank.size(); ++i)
        for (const auto& g : iv.by_rank[i])
            for (auto&& up : up_covers(g))
                if (below_top.contains(up))
                    iv.by_rank[i + 1].insert(up);
    return iv;
}

/// Calls `visit` with every saturated chain from iv.top down to iv.bottom
/// (top first), depth-first in canonical cover order.
inline void for_each_maximal_chain(const Interval& iv, const std::function<void(const Chain&)>& visit)
{
    Chain path{iv.top};
    std::function<void()> descend = [&] {
        const ColoredComposition& cur = path.back();
        if (cur.weight() == iv.bottom.weight()) {
            visit(path);
            return;
        }
        for (auto&& next : down_covers(cur)) {
            if (!iv.contains(next))
                continue;
            path.push_back(next);
            descend();
            path.pop_back();
        }
    };
    descend();
}

inline std::vector<Chain> maximal_chains(const Interval& iv)
{
    std::vector<Chain> out;
    for_each_maximal_chain(iv, [&](const Chain& c) { out.push_back(c); });
    return out;
}

/// Number of saturated chains from the empty composition up to `top`,
/// counted by dynamic programming over the down-set.
inline std::uint64_t count_chains_from_empty(const ColoredComposition& top)
{
    const Downset& d = thread_downset_cache().of(top);
    std::map<ColoredComposition, std::uint64_t> ways;
    ways[ColoredComposition(top.colors())] = 1;
    for (unsigned r = 1; r <= top.weight(); ++r)
        for (const auto& x : d.by_rank[r]) {
            std::uint64_t w = 0;
            for (const auto& y : down_covers(x))
                w = detail::checked_add(w, ways[y]);
            ways[x] = w;
        }
    return ways[top];
}

namespace detail {

inline std::string dot_id(const ColoredComposition& a) { return '"' + render(a) + '"'; }

} // namespace detail

/// Hasse diagram of ranks 0..n_max as a DOT digraph. Vertices are canonical
/// text labels (the empty composition is "" displayed as ∅); edges point
/// from the covered element to the covering one.
inline std::string hasse_dot(unsigned m, unsigned n_max)
{
    const auto ranks = enumerate_ranks(m, n_max);
    std::ostringstream os;
    os << "digraph {\n  rankdir=BT;\n";
    for (const auto& rank : ranks)
        for (const auto& a : rank) {
            os << "  " << detail::dot_id(a);
            if (a.empty())
                os << " [label=\"∅\"]";
            os << ";\n";
        }
    for (unsigned n = 0; n < n_max; ++n)
        for (const auto& a : ranks[n])
            for (const auto& b : up_covers(a))
                os << "  " << detail::dot_id(a) << " -> " << detail::dot_id(b) << ";\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Subword order, used only as a comparison oracle.
// ---------------------------------------------------------------------------

struct Word {
    unsigned alphabet = 2;
    std::vector<unsigned> letters;

    Word() = default;
    Word(unsigned alphabet_size, std::vector<unsigned> ls) : alphabet(alphabet_size), letters(std::move(ls))
    {
        for (unsigned l : letters)
            if (l >= alphabet)
                throw std::invalid_argument("word letter outside alphabet");
    }

    friend auto operator<=>(const Word&, const Word&) = default;
};

/// Distinct words obtained by deleting one letter.
inline std::set<Word> subword_down_covers(const Word& w)
{
    std::set<Word> out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        std::vector<unsigned> ls = w.letters;
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
        out.emplace(w.alphabet, std::move(ls));
    }
    return out;
}

/// Largest down-cover count over all words of the given length.
inline std::size_t max_subword_down_covers(unsigned alphabet, unsigned length)
{
    std::size_t best = 0;
    std::vector<unsigned> ls(length, 0);
    for (;;) {
        best = std::max(best, subword_down_covers(Word(alphabet, ls)).size());
        std::size_t i = ls.size();
        while (i > 0 && ls[i - 1] + 1 == alphabet)
            ls[--i] = 0;
        if (i == 0)
            break;
        ++ls[i - 1];
    }
    return best;
}

} // namespace colcomp
