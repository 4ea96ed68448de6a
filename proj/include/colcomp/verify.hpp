#pragma once

// Exhaustive desk-scale sweeps of the poset's structural properties. Each
// sweep stops at the first counterexample and reports it.

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "perms.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "shelling.hpp"

namespace colcomp {

struct SweepResult {
    bool ok = true;
    std::uint64_t checked = 0;
    std::string counterexample;

    explicit operator bool() const noexcept { return ok; }

    SweepResult& fail(std::string why)
    {
        if (ok) {
            ok = false;
            counterexample = std::move(why);
        }
        return *this;
    }
};

/// Power-series coefficients of num(t)/den(t) up to t^n; den[0] must be 1.
inline std::vector<std::int64_t> series_coefficients(const std::vector<std::int64_t>& num,
                                                     const std::vector<std::int64_t>& den, unsigned n)
{
    if (den.empty() || den[0] != 1)
        throw std::invalid_argument("series_coefficients: denominator must start with 1");
    std::vector<std::int64_t> c(n + 1, 0);
    for (unsigned k = 0; k <= n; ++k) {
        std::int64_t v = k < num.size() ? num[k] : 0;
        for (unsigned i = 1; i <= k && i < den.size(); ++i)
            v = detail::checked_add(v, detail::checked_mul(-den[i], c[k - i]));
        c[k] = v;
    }
    return c;
}

/// Enumeration sizes against m(m+1)^(n-1), uniqueness, validity, and order.
inline SweepResult verify_counting(unsigned m, unsigned n_max)
{
    SweepResult r;
    for (unsigned n = 0; n <= n_max; ++n) {
        const auto all = enumerate_compositions(m, n);
        if (all.size() != count_compositions(m, n))
            return r.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + ": enumerated "
                          + std::to_string(all.size()) + ", expected " + std::to_string(count_compositions(m, n)));
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (all[i].weight() != n || all[i].colors() != m)
                return r.fail("wrong weight or m: " + render(all[i]));
            if (i > 0 && !(all[i - 1] < all[i]))
                return r.fail("duplicate or out of canonical order at " + render(all[i]));
        }
        ++r.checked;
    }
    return r;
}

/// |up_covers| = m(n+1) and up/down duality for every composition of rank <= n_max.
inline SweepResult verify_covers(unsigned m, unsigned n_max)
{
    SweepResult r;
    std::map<ColoredComposition, CompositionSet> covered_by; // beta -> {alpha : alpha < beta}
    for (unsigned n = 0; n <= n_max; ++n) {
        for (const auto& a : enumerate_compositions(m, n)) {
            const auto up = up_covers(a);
            if (up.size() != std::uint64_t{m} * (n + 1))
                return r.fail(render(a) + " has " + std::to_string(up.size()) + " up-covers, expected "
                              + std::to_string(m * (n + 1)));
            for (const auto& b : up) {
                if (b.weight() != n + 1)
                    return r.fail("cover of " + render(a) + " has the wrong weight");
                covered_by[b].insert(a);
            }
            if (n > 0) {
                const auto down = down_covers(a);
                if (down != covered_by[a])
                    return r.fail("down_covers(" + render(a) + ") disagrees with inverted up_covers");
            }
            ++r.checked;
        }
    }
    return r;
}

/// chain_of_permutation is a bijection C_m wr S_n -> saturated chains from
/// the empty composition to rank n, inverted by permutation_of_chain.
inline SweepResult verify_bijection(unsigned m, unsigned n, std::uint64_t max_size = default_max_permutations)
{
    SweepResult r;
    if (count_permutations(m, n) > max_size)
        throw SizeGuardError("bijection sweep exceeds the size guard");

    std::set<Chain> image;
    for (const auto& u : enumerate_permutations(m, n)) {
        Chain c = chain_of_permutation(u);
        for (std::size_t i = 1; i < c.size(); ++i)
            if (!up_covers(c[i - 1]).contains(c[i]))
                return r.fail("chain of " + render(u) + " has a non-cover step at " + render(c[i]));
        if (permutation_of_chain(c) != u)
            return r.fail("permutation_of_chain does not invert " + render(u));
        if (!image.insert(std::move(c)).second)
            return r.fail("two permutations share the chain of " + render(u));
        ++r.checked;
    }

    // every saturated chain from the empty composition, built upward
    std::set<Chain> all_chains;
    Chain path{ColoredComposition(m)};
    std::function<void()> grow = [&] {
        if (path.size() == n + 1) {
            all_chains.insert(path);
            return;
        }
        for (auto&& b : up_covers(path.back())) {
            path.push_back(b);
            grow();
            path.pop_back();
        }
    };
    grow();
    if (all_chains != image)
        return r.fail("image has " + std::to_string(image.size()) + " chains but rank " + std::to_string(n)
                      + " has " + std::to_string(all_chains.size()));
    return r;
}

/// Pieri rule for every alpha of weight <= n_max at N = |alpha| + 1.
inline SweepResult verify_pieri_sweep(unsigned m, unsigned n_max)
{
    SweepResult r;
    for (unsigned n = 0; n <= n_max; ++n)
        for (const auto& a : enumerate_compositions(m, n)) {
            if (!verify_pieri(a, n + 1))
                return r.fail("Pieri rule fails for " + render(a));
            ++r.checked;
        }
    return r;
}

/// Shuffle product for all u in C_m wr S_n, v on n+1..n+r, n + r <= total_max,
/// at N = max(n + r, 1).
inline SweepResult verify_shuffle_sweep(unsigned m, unsigned total_max)
{
    SweepResult r;
    for (unsigned n = 0; n <= total_max; ++n)
        for (unsigned k = 0; n + k <= total_max; ++k) {
            const auto us = enumerate_permutations(m, n);
            const auto vs = enumerate_permutations(m, k);
            for (const auto& u : us)
                for (const auto& v0 : vs) {
                    std::vector<Letter> v(v0.letters().begin(), v0.letters().end());
                    for (Letter& l : v)
                        l.value += n;
                    if (!verify_shuffle_product(u.letters(), v, m, std::max(n + k, 1u)))
                        return r.fail("shuffle product fails for u=" + render(u) + " v=" + render(v));
                    ++r.checked;
                }
        }
    return r;
}

namespace detail {

struct PathTally {
    std::uint64_t paths = 0;
    std::uint64_t weakly_increasing = 0;
    Label least;
    Chain least_chain;
    Label increasing;
};

inline std::string render_label(const Label& l)
{
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); ++i)
        s += (i ? ",(" : "(") + std::to_string(l[i].urn) + "," + std::to_string(l[i].type) + ")";
    return s + ")";
}

} // namespace detail

/// Dual CL property on every interval [beta, alpha] with |alpha| <= n_max:
/// exactly one maximal chain has a weakly increasing label, it is the
/// lexicographically least, and it is what lex_first_chain returns. Along the
/// way, the moves out of every visited urn state must realize that state's
/// down-covers one-to-one with distinct labels.
inline SweepResult verify_cl_sweep(unsigned m, unsigned n_max)
{
    SweepResult r;
    for (unsigned n = 0; n <= n_max; ++n)
        for (const auto& top : enumerate_compositions(m, n)) {
            std::map<ColoredComposition, detail::PathTally> tally;
            Label label;
            Chain chain{top};
            std::string failure;
            std::function<void(const UrnState&)> walk = [&](const UrnState& s) {
                if (!failure.empty())
                    return;
                auto& t = tally[chain.back()];
                ++t.paths;
                if (t.paths == 1 || label < t.least) {
                    t.least = label;
                    t.least_chain = chain;
                }
                if (weakly_increasing(label)) {
                    ++t.weakly_increasing;
                    t.increasing = label;
                }
                if (s.balls() == 0)
                    return;
                const auto moves = legal_moves(s);
                CompositionSet reached;
                std::set<MoveLabel> labels;
                for (const auto& mv : moves) {
                    reached.insert(mv.next.composition());
                    labels.insert(mv.label);
                }
                if (reached.size() != moves.size() || labels.size() != moves.size()
                    || reached != down_covers(chain.back())) {
                    failure = "moves from the urns of " + render(chain.back()) + " (top " + render(top)
                              + ") do not match its down-covers one-to-one";
                    return;
                }
                for (const auto& mv : moves) {
                    label.push_back(mv.label);
                    chain.push_back(mv.next.composition());
                    walk(mv.next);
                    chain.pop_back();
                    label.pop_back();
                }
            };
            walk(urns_of(top));
            if (!failure.empty())
                return r.fail(failure);

            for (const auto& [bottom, t] : tally) {
                const std::string where = "[" + render(bottom) + ", " + render(top) + "]";
                if (t.weakly_increasing != 1)
                    return r.fail(where + " has " + std::to_string(t.weakly_increasing)
                                  + " weakly increasing chains");
                if (t.increasing != t.least)
                    return r.fail(where + ": increasing label " + detail::render_label(t.increasing)
                                  + " is not the least " + detail::render_label(t.least));
                const LabeledChain greedy = lex_first_chain(bottom, top);
                if (greedy.label != t.least || greedy.chain != t.least_chain)
                    return r.fail(where + ": lex_first_chain gives " + detail::render_label(greedy.label));
                ++r.checked;
            }
        }
    return r;
}

/// Closed form, strictly-decreasing label count, and recursion agree on every
/// [empty, alpha]; label count and recursion agree on every [beta, alpha];
/// all for |alpha| <= n_max.
inline SweepResult verify_mobius_sweep(unsigned m, unsigned n_max)
{
    SweepResult r;
    const ColoredComposition empty(m);
    for (unsigned n = 0; n <= n_max; ++n)
        for (const auto& a : enumerate_compositions(m, n)) {
            const auto closed = mobius_closed_form(a);
            const auto labels = mobius_via_labels(empty, a);
            const auto rec = mobius_recursive(empty, a);
            if (closed != labels || labels != rec)
                return r.fail("mu(empty, " + render(a) + "): closed " + std::to_string(closed) + ", labels "
                              + std::to_string(labels) + ", recursion " + std::to_string(rec));
            ++r.checked;
        }
    for (unsigned b = 0; b <= n_max; ++b)
        for (const auto& bottom : enumerate_compositions(m, b)) {
            for (const auto& [top, mu] : mobius_upward_table(bottom, n_max)) {
                const auto labels = mobius_via_labels(bottom, top);
                if (labels != mu)
                    return r.fail("mu(" + render(bottom) + ", " + render(top) + "): labels "
                                  + std::to_string(labels) + ", recursion " + std::to_string(mu));
                ++r.checked;
            }
        }
    return r;
}

/// mu(empty, 1^) of the truncated poset against (-1)^(n+1)(m-1)^n, n = 1..n_max.
inline SweepResult verify_truncated(unsigned m, unsigned n_max)
{
    SweepResult r;
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto t = truncated_mobius(m, n);
        if (!t.agrees())
            return r.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + ": recursion " + std::to_string(t.value)
                          + ", formula " + std::to_string(t.expected));
        ++r.checked;
    }
    return r;
}

/// Unsigned coefficients = m(m-1)^(n-1) = coefficients of (1+t)/(1-(m-1)t);
/// signed coefficients = rank sums of the recursion oracle = coefficients of
/// (1-t)/(1+(m-1)t).
inline SweepResult verify_series(unsigned m, unsigned n_max)
{
    SweepResult r;
    const auto s = mobius_series(m, n_max);
    const auto mm = static_cast<std::int64_t>(m);
    const auto unsigned_gf = series_coefficients({1, 1}, {1, -(mm - 1)}, n_max);
    const auto signed_gf = series_coefficients({1, -1}, {1, mm - 1}, n_max);
    const auto mu = mobius_upward_table(ColoredComposition(m), n_max);
    std::vector<std::int64_t> oracle(n_max + 1, 0);
    for (const auto& [a, v] : mu)
        oracle[a.weight()] += v;
    for (unsigned n = 0; n <= n_max; ++n) {
        std::int64_t support = 1;
        if (n > 0) {
            support = mm;
            for (unsigned i = 1; i < n; ++i)
                support *= mm - 1;
        }
        const auto u = static_cast<std::int64_t>(s.unsigned_coefficients[n]);
        if (u != support || u != unsigned_gf[n])
            return r.fail("n=" + std::to_string(n) + ": unsigned " + std::to_string(u) + ", m(m-1)^(n-1) "
                          + std::to_string(support) + ", (1+t)/(1-(m-1)t) " + std::to_string(unsigned_gf[n]));
        if (s.signed_coefficients[n] != oracle[n] || oracle[n] != signed_gf[n])
            return r.fail("n=" + std::to_string(n) + ": signed " + std::to_string(s.signed_coefficients[n])
                          + ", recursion " + std::to_string(oracle[n]) + ", (1-t)/(1+(m-1)t) "
                          + std::to_string(signed_gf[n]));
        ++r.checked;
    }
    return r;
}

/// (1, w1, 1) has four down-covers in every C^(m), m = 2..m_max, while no
/// length-3 word over an alphabet of size <= alphabet_max has more than three.
inline SweepResult verify_subword_witness(unsigned m_max, unsigned alphabet_max)
{
    SweepResult r;
    for (unsigned m = 2; m <= m_max; ++m) {
        const ColoredComposition w(m, {Part{1, Color{0}}, Part{1, Color{1}}, Part{1, Color{0}}});
        if (down_covers(w).size() != 4)
            return r.fail("(1,w1,1) has " + std::to_string(down_covers(w).size()) + " down-covers for m="
                          + std::to_string(m));
        ++r.checked;
    }
    for (unsigned a = 1; a <= alphabet_max; ++a) {
        if (max_subword_down_covers(a, 3) > 3)
            return r.fail("a length-3 word over " + std::to_string(a) + " letters covers more than 3 subwords");
        ++r.checked;
    }
    return r;
}

} // namespace colcomp
