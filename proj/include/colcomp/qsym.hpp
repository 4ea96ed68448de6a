#pragma once

// Colored fundamental quasisymmetric functions, realized as integer sparse
// polynomials in the variables x_{color,position}, position <= N.

#include <algorithm>
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
#include "perms.hpp"
#include "poset.hpp"

namespace colcomp {

/// The variable x_{color, position}. Variables are ordered by (position,
/// color); x_{0,1} comes first.
struct Variable {
    unsigned position = 1;
    Color color;

    friend constexpr auto operator<=>(const Variable&, const Variable&) = default;
};

struct VarPower {
    Variable var;
    unsigned exp = 1;

    friend constexpr bool operator==(const VarPower&, const VarPower&) = default;
};

/// Sparse monomial: variables in increasing order, exponents >= 1.
///
/// Monomials compare in lexicographic order with respect to the variable
/// order, so x_{0,1} > x_{1,1} > x_{0,2} > ... and the greatest monomial of a
/// polynomial is its leading monomial.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<VarPower> powers) : powers_(std::move(powers))
    {
        std::sort(powers_.begin(), powers_.end(),
                  [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
        std::vector<VarPower> merged;
        for (const VarPower& p : powers_) {
            if (p.exp == 0)
                continue;
            if (!merged.empty() && merged.back().var == p.var)
                merged.back().exp += p.exp;
            else
                merged.push_back(p);
        }
        powers_ = std::move(merged);
    }

    std::span<const VarPower> powers() const noexcept { return powers_; }
    bool is_one() const noexcept { return powers_.empty(); }

    unsigned degree() const noexcept
    {
        unsigned d = 0;
        for (const VarPower& p : powers_)
            d += p.exp;
        return d;
    }

    Monomial operator*(const Monomial& other) const
    {
        std::vector<VarPower> all = powers_;
        all.insert(all.end(), other.powers_.begin(), other.powers_.end());
        return Monomial(std::move(all));
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept
    {
        std::size_t i = 0;
        for (; i < a.powers_.size() && i < b.powers_.size(); ++i) {
            const VarPower& x = a.powers_[i];
            const VarPower& y = b.powers_[i];
            if (x.var != y.var)
                // the one carrying the earlier variable has the larger exponent there
                return x.var < y.var ? std::strong_ordering::greater : std::strong_ordering::less;
            if (x.exp != y.exp)
                return x.exp <=> y.exp;
        }
        return a.powers_.size() <=> b.powers_.size();
    }

private:
    std::vector<VarPower> powers_;
};

/// Integer polynomial over the m colors and positions 1..N.
class SparsePolynomial {
public:
    using Terms = std::map<Monomial, std::int64_t>;

    SparsePolynomial(unsigned m, unsigned positions) : m_(m), n_(positions)
    {
        if (m == 0 || positions == 0)
            throw std::invalid_argument("SparsePolynomial: m and N must be >= 1");
    }

    static SparsePolynomial constant(unsigned m, unsigned positions, std::int64_t c)
    {
        SparsePolynomial p(m, positions);
        p.add_term(Monomial{}, c);
        return p;
    }

    unsigned colors() const noexcept { return m_; }
    unsigned positions() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::int64_t coefficient(const Monomial& mono) const
    {
        auto it = terms_.find(mono);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Monomial& mono, std::int64_t c)
    {
        for (const VarPower& p : mono.powers())
            if (p.var.color.index >= m_ || p.var.position == 0 || p.var.position > n_)
                throw std::invalid_argument("SparsePolynomial: variable outside (m, N)");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second = detail::checked_add(it->second, c);
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Largest monomial, or nullopt for the zero polynomial.
    std::optional<Monomial> leading_monomial() const
    {
        if (terms_.empty())
            return std::nullopt;
        return terms_.rbegin()->first;
    }

    SparsePolynomial& operator+=(const SparsePolynomial& q)
    {
        require_compatible(q);
        for (const auto& [mono, c] : q.terms_)
            add_term(mono, c);
        return *this;
    }

    SparsePolynomial& operator-=(const SparsePolynomial& q)
    {
        require_compatible(q);
        for (const auto& [mono, c] : q.terms_)
            add_term(mono, detail::checked_mul(c, std::int64_t{-1}));
        return *this;
    }

    SparsePolynomial scaled(std::int64_t k) const
    {
        SparsePolynomial r(m_, n_);
        for (const auto& [mono, c] : terms_)
            r.add_term(mono, detail::checked_mul(c, k));
        return r;
    }

    friend SparsePolynomial operator+(SparsePolynomial p, const SparsePolynomial& q) { return p += q; }
    friend SparsePolynomial operator-(SparsePolynomial p, const SparsePolynomial& q) { return p -= q; }

    friend bool operator==(const SparsePolynomial& p, const SparsePolynomial& q)
    {
        return p.m_ == q.m_ && p.n_ == q.n_ && p.terms_ == q.terms_;
    }

    void require_compatible(const SparsePolynomial& q) const
    {
        if (m_ != q.m_ || n_ != q.n_)
            throw std::invalid_argument("SparsePolynomial: mismatched (m, N)");
    }

private:
    unsigned m_;
    unsigned n_;
    Terms terms_;
};

inline SparsePolynomial multiply(const SparsePolynomial& p, const SparsePolynomial& q)
{
    p.require_compatible(q);
    SparsePolynomial r(p.colors(), p.positions());
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms())
            r.add_term(a * b, detail::checked_mul(ca, cb));
    return r;
}

inline SparsePolynomial operator*(const SparsePolynomial& p, const SparsePolynomial& q) { return multiply(p, q); }

/// L^(m)_alpha truncated to positions 1..N: the sum of
/// x_{c_1,i_1} ... x_{c_n,i_n} over i_1 <= ... <= i_n <= N, where c_s is the
/// color of the part holding letter s, and i_s < i_{s+1} is forced exactly
/// when s ends a part and c_s >= c_{s+1}.
inline SparsePolynomial fundamental_polynomial(const ColoredComposition& alpha, unsigned positions)
{
    SparsePolynomial out(alpha.colors(), positions);
    const unsigned n = alpha.weight();
    std::vector<Color> letter_color;
    std::vector<bool> strict_after; // strict_after[s]: i_s < i_{s+1} required
    for (std::size_t r = 0; r < alpha.length(); ++r)
        for (unsigned h = 0; h < alpha[r].size; ++h) {
            letter_color.push_back(alpha[r].color);
            const bool ends_part = h + 1 == alpha[r].size && r + 1 < alpha.length();
            strict_after.push_back(ends_part && alpha[r].color >= alpha[r + 1].color);
        }

    std::vector<unsigned> index(n, 0);
    std::function<void(unsigned, unsigned)> place = [&](unsigned s, unsigned lowest) {
        if (s == n) {
            std::vector<VarPower> powers;
            powers.reserve(n);
            for (unsigned t = 0; t < n; ++t)
                powers.push_back(VarPower{Variable{index[t], letter_color[t]}, 1});
            out.add_term(Monomial(std::move(powers)), 1);
            return;
        }
        for (unsigned i = lowest; i <= positions; ++i) {
            index[s] = i;
            place(s + 1, strict_after[s] ? i + 1 : i);
        }
    };
    place(0, 1);
    return out;
}

/// Sum of L_(1c_j) over all colors j: the degree-one element of the Pieri rule.
inline SparsePolynomial degree_one_sum(unsigned m, unsigned positions)
{
    SparsePolynomial s(m, positions);
    for (unsigned j = 0; j < m; ++j)
        s += fundamental_polynomial(ColoredComposition(m, {Part{1, Color{j}}}), positions);
    return s;
}

/// Interleavings of u (values 1..n) with v (values n+1..n+r), colors
/// carried along. Ordered by the positions taken by v, lexicographically.
inline std::vector<ColoredPermutation> shuffles(std::span<const Letter> u, std::span<const Letter> v, unsigned m)
{
    const std::size_t n = u.size();
    const std::size_t r = v.size();
    std::vector<bool> seen(n + r + 1, false);
    for (const Letter& l : u) {
        if (l.value < 1 || l.value > n || seen[l.value])
            throw std::invalid_argument("shuffles: u must have values 1..n");
        seen[l.value] = true;
    }
    for (const Letter& l : v) {
        if (l.value <= n || l.value > n + r || seen[l.value])
            throw std::invalid_argument("shuffles: v must have values n+1..n+r disjoint from u");
        seen[l.value] = true;
    }

    std::vector<ColoredPermutation> out;
    std::vector<std::size_t> slots(r);
    for (std::size_t i = 0; i < r; ++i)
        slots[i] = i;
    for (;;) {
        std::vector<Letter> w;
        w.reserve(n + r);
        std::size_t iu = 0;
        std::size_t iv = 0;
        for (std::size_t p = 0; p < n + r; ++p) {
            if (iv < r && slots[iv] == p)
                w.push_back(v[iv++]);
            else
                w.push_back(u[iu++]);
        }
        out.emplace_back(m, std::move(w));

        // next r-subset of {0..n+r-1} in lexicographic order
        std::size_t i = r;
        while (i > 0 && slots[i - 1] == n + i - 1)
            --i;
        if (i == 0)
            break;
        ++slots[i - 1];
        for (std::size_t k = i; k < r; ++k)
            slots[k] = slots[k - 1] + 1;
    }
    return out;
}

/// Outcome of comparing both sides of a polynomial identity.
struct IdentityCheck {
    bool holds = false;
    std::optional<Monomial> first_difference; // largest monomial where the sides differ
    std::size_t summands = 0;                  // number of fundamental terms on the right

    explicit operator bool() const noexcept { return holds; }
};

inline IdentityCheck compare_sides(const SparsePolynomial& lhs, const SparsePolynomial& rhs, std::size_t summands)
{
    IdentityCheck r;
    r.summands = summands;
    const SparsePolynomial diff = lhs - rhs;
    r.holds = diff.is_zero();
    r.first_difference = diff.leading_monomial();
    return r;
}

/// L_{C(u)} L_{C(v)} == sum over shuffles w of L_{C(w)}, at N positions.
inline IdentityCheck verify_shuffle_product(std::span<const Letter> u, std::span<const Letter> v, unsigned m,
                                            unsigned positions)
{
    const SparsePolynomial lhs = fundamental_polynomial(colored_descent_composition(u, m), positions)
                                 * fundamental_polynomial(colored_descent_composition(v, m), positions);
    SparsePolynomial rhs(m, positions);
    const auto ws = shuffles(u, v, m);
    for (const auto& w : ws)
        rhs += fundamental_polynomial(colored_descent_composition(w), positions);
    return compare_sides(lhs, rhs, ws.size());
}

/// (sum_j L_(1c_j)) L_alpha == sum over beta covering alpha of L_beta.
inline IdentityCheck verify_pieri(const ColoredComposition& alpha, unsigned positions)
{
    const unsigned m = alpha.colors();
    const SparsePolynomial lhs = degree_one_sum(m, positions) * fundamental_polynomial(alpha, positions);
    SparsePolynomial rhs(m, positions);
    const auto covers = up_covers(alpha);
    for (const auto& beta : covers)
        rhs += fundamental_polynomial(beta, positions);
    return compare_sides(lhs, rhs, covers.size());
}

/// Leading monomial of L_alpha for every alpha of weight n. Throws
/// std::logic_error if two share a leading monomial.
inline std::map<Monomial, ColoredComposition> leading_monomial_table(unsigned m, unsigned n, unsigned positions)
{
    std::map<Monomial, ColoredComposition> table;
    for (const auto& alpha : enumerate_compositions(m, n)) {
        auto lead = fundamental_polynomial(alpha, positions).leading_monomial();
        if (!lead)
            throw std::logic_error("fundamental polynomial vanished; N too small");
        if (!table.emplace(*lead, alpha).second)
            throw std::logic_error("two fundamental polynomials share a leading monomial");
    }
    return table;
}

/// Coefficients of a homogeneous degree-n polynomial in the fundamental
/// basis, by elimination against leading monomials. Needs N >= n. Throws
/// std::domain_error if p is not in their span.
inline std::map<ColoredComposition, std::int64_t> fundamental_coefficients(const SparsePolynomial& p, unsigned n)
{
    if (p.positions() < n)
        throw std::invalid_argument("fundamental_coefficients: need N >= degree");
    const auto table = leading_monomial_table(p.colors(), n, p.positions());
    std::map<ColoredComposition, std::int64_t> coefs;
    SparsePolynomial rest = p;
    while (auto lead = rest.leading_monomial()) {
        auto it = table.find(*lead);
        if (it == table.end())
            throw std::domain_error("polynomial is not a combination of degree-" + std::to_string(n)
                                    + " fundamental quasisymmetric functions");
        const std::int64_t c = rest.coefficient(*lead);
        coefs[it->second] = c;
        rest -= fundamental_polynomial(it->second, p.positions()).scaled(c);
    }
    return coefs;
}

namespace detail {

// Positions in the support renumbered 1..k, order preserved.
inline Monomial compress_positions(const Monomial& mono)
{
    std::vector<VarPower> out(mono.powers().begin(), mono.powers().end());
    unsigned next = 0;
    unsigned last = 0;
    for (VarPower& p : out) {
        if (p.var.position != last) {
            last = p.var.position;
            ++next;
        }
        p.var.position = next;
    }
    return Monomial(std::move(out));
}

inline std::uint64_t binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace detail

/// True when every coefficient depends only on the per-position color
/// content taken in increasing position order, i.e. p is colored
/// quasisymmetric up to the truncation.
inline bool is_quasisymmetric(const SparsePolynomial& p)
{
    std::map<Monomial, std::uint64_t> spread_count;
    for (const auto& [mono, c] : p.terms()) {
        const Monomial rep = detail::compress_positions(mono);
        if (p.coefficient(rep) != c)
            return false;
        ++spread_count[rep];
    }
    for (const auto& [rep, count] : spread_count) {
        const unsigned k = rep.is_one() ? 0 : rep.powers().back().var.position;
        if (count != detail::binomial(p.positions(), k))
            return false;
    }
    return true;
}

} // namespace colcomp
