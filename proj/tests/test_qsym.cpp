#include <gtest/gtest.h>

#include "colcomp/colcomp.hpp"
#include "oracles.hpp"

using namespace colcomp;

namespace {

ColoredComposition comp(unsigned m, std::string_view text) { return parse_composition(text, m); }
ColoredPermutation perm(unsigned m, std::string_view text) { return parse_permutation(text, m); }

struct P {
    unsigned pos, color, exp;
};

Monomial mono(std::initializer_list<P> ps)
{
    std::vector<VarPower> v;
    for (const P& p : ps)
        v.push_back(VarPower{Variable{p.pos, Color{p.color}}, p.exp});
    return Monomial(v);
}

} // namespace

TEST(Qsym, MonomialOrderIsLex)
{
    // x_{0,1} > x_{1,1} > x_{0,2}
    EXPECT_GT(mono({{1, 0, 1}}), mono({{1, 1, 1}}));
    EXPECT_GT(mono({{1, 1, 1}}), mono({{2, 0, 1}}));
    EXPECT_GT(mono({{1, 0, 2}}), mono({{1, 0, 1}, {2, 0, 1}}));
    EXPECT_GT(mono({{1, 0, 1}, {2, 0, 1}}), mono({{1, 0, 1}, {3, 0, 1}}));
    EXPECT_EQ(mono({{2, 0, 1}, {1, 0, 1}}), mono({{1, 0, 1}, {2, 0, 1}}));
    EXPECT_EQ(mono({{1, 0, 1}}) * mono({{1, 0, 1}}), mono({{1, 0, 2}}));
    EXPECT_EQ((mono({{1, 0, 2}, {2, 1, 1}}).degree()), 3u);
}

TEST(Qsym, PolynomialArithmetic)
{
    SparsePolynomial p(2, 2);
    p.add_term(mono({{1, 0, 1}}), 3);
    p.add_term(mono({{1, 0, 1}}), -3);
    EXPECT_TRUE(p.is_zero());
    p.add_term(mono({{2, 1, 1}}), 2);
    EXPECT_EQ(p.coefficient(mono({{2, 1, 1}})), 2);
    EXPECT_THROW(p.add_term(mono({{3, 0, 1}}), 1), std::invalid_argument);
    EXPECT_THROW(p.add_term(mono({{1, 2, 1}}), 1), std::invalid_argument);
    EXPECT_THROW(p += SparsePolynomial(3, 2), std::invalid_argument);
    const auto sq = p * p;
    EXPECT_EQ(sq.coefficient(mono({{2, 1, 2}})), 4);
    EXPECT_EQ(SparsePolynomial::constant(2, 2, 5).coefficient(Monomial{}), 5);
}

TEST(Qsym, OrdinaryFundamentalTwoOne)
{
    const auto p = fundamental_polynomial(comp(1, "2c0,1c0"), 3);
    SparsePolynomial expected(1, 3);
    expected.add_term(mono({{1, 0, 2}, {2, 0, 1}}), 1);
    expected.add_term(mono({{1, 0, 2}, {3, 0, 1}}), 1);
    expected.add_term(mono({{1, 0, 1}, {2, 0, 1}, {3, 0, 1}}), 1);
    expected.add_term(mono({{2, 0, 2}, {3, 0, 1}}), 1);
    EXPECT_EQ(p, expected);
    EXPECT_EQ(p.terms().size(), 4u);
}

TEST(Qsym, TwoColorExample)
{
    // i <= j <= k < l; variables x y y y
    const auto p = fundamental_polynomial(comp(2, "1c0,2c1,1c1"), 4);
    EXPECT_EQ(p, oracle::polynomial_from_inequalities(2, 4, {0, 1, 1, 1}, {false, false, true}));
}

TEST(Qsym, ThreeColorExample)
{
    // i <= j <= k < l <= m; variables x x z y y
    const auto p = fundamental_polynomial(comp(3, "2c0,1c2,2c1"), 5);
    EXPECT_EQ(p, oracle::polynomial_from_inequalities(3, 5, {0, 0, 2, 1, 1}, {false, false, true, false}));
}

TEST(Qsym, EmptyCompositionIsOne)
{
    EXPECT_EQ(fundamental_polynomial(ColoredComposition(2), 3), SparsePolynomial::constant(2, 3, 1));
}

TEST(Qsym, OrdinaryProductExpansion)
{
    // L_1 L_1 = L_2 + L_11
    const auto l1 = fundamental_polynomial(comp(1, "1c0"), 3);
    const auto rhs = fundamental_polynomial(comp(1, "2c0"), 3) + fundamental_polynomial(comp(1, "1c0,1c0"), 3);
    EXPECT_EQ(l1 * l1, rhs);
}

TEST(Qsym, Shuffles)
{
    const auto u = perm(2, "1c1");
    const std::vector<Letter> v{Letter{2, Color{0}}};
    const auto ws = shuffles(u.letters(), v, 2);
    ASSERT_EQ(ws.size(), 2u);
    EXPECT_EQ(render(ws[0]), "2c0,1c1");
    EXPECT_EQ(render(ws[1]), "1c1,2c0");

    const auto a = perm(2, "2c0,1c1");
    const std::vector<Letter> b{Letter{4, Color{1}}, Letter{3, Color{0}}};
    EXPECT_EQ(shuffles(a.letters(), b, 2).size(), 6u);

    const std::vector<Letter> bad{Letter{1, Color{0}}};
    EXPECT_THROW(shuffles(u.letters(), bad, 2), std::invalid_argument);
}

TEST(Qsym, ShufflesOfSingleLetterAreInsertions)
{
    // shuffling v = w^j (n+1) into u gives exactly the n+1 insertions of n+1
    const auto u = perm(2, "2c1,1c0,3c0");
    for (unsigned j = 0; j < 2; ++j) {
        const std::vector<Letter> v{Letter{4, Color{j}}};
        std::set<ColoredPermutation> got;
        for (auto&& w : shuffles(u.letters(), v, 2))
            got.insert(w);
        std::set<ColoredPermutation> want;
        for (unsigned pos = 0; pos <= 3; ++pos) {
            std::vector<Letter> w(u.letters().begin(), u.letters().end());
            w.insert(w.begin() + pos, v[0]);
            want.insert(ColoredPermutation(2, w));
        }
        EXPECT_EQ(got, want);
    }
}

TEST(Qsym, ShuffleProductSmall)
{
    const auto u = perm(2, "1c1");
    const auto v = perm(2, "1c0,2c0");
    std::vector<Letter> shifted;
    for (const auto& l : v.letters())
        shifted.push_back(Letter{l.value + 1, l.color});
    const auto r = verify_shuffle_product(u.letters(), shifted, 2, 3);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.summands, 3u);
}

TEST(Qsym, PieriSmall)
{
    const auto r = verify_pieri(comp(2, "2c0"), 3);
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.first_difference.has_value());
    EXPECT_EQ(r.summands, 6u);
    EXPECT_TRUE(verify_pieri(ColoredComposition(3), 1));
}

TEST(Qsym, PieriSweeps)
{
    auto r = verify_pieri_sweep(2, 3);
    EXPECT_TRUE(r.ok) << r.counterexample;
    r = verify_pieri_sweep(3, 2);
    EXPECT_TRUE(r.ok) << r.counterexample;
    r = verify_shuffle_sweep(2, 3);
    EXPECT_TRUE(r.ok) << r.counterexample;
}

TEST(Qsym, FundamentalBasisLeadingMonomialsDistinct)
{
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 0; n <= (m == 3 ? 3u : 4u); ++n)
            EXPECT_EQ(leading_monomial_table(m, n, std::max(n, 1u)).size(), count_compositions(m, n));
}

TEST(Qsym, IteratedPieriCountsChains)
{
    for (unsigned n = 1; n <= 4; ++n) {
        const unsigned m = 2;
        SparsePolynomial power = SparsePolynomial::constant(m, n, 1);
        for (unsigned i = 0; i < n; ++i)
            power = power * degree_one_sum(m, n);
        const auto coefs = fundamental_coefficients(power, n);
        const auto tally = count_by_descent_composition(m, n);
        std::map<ColoredComposition, std::int64_t> expected;
        for (const auto& [a, f] : tally)
            expected[a] = static_cast<std::int64_t>(f);
        EXPECT_EQ(coefs, expected) << "n=" << n;
    }
}

TEST(Qsym, FundamentalCoefficientsRejectsNonQuasisymmetric)
{
    SparsePolynomial p(1, 2);
    p.add_term(mono({{1, 0, 1}}), 1);
    EXPECT_THROW(fundamental_coefficients(p, 1), std::domain_error);
    EXPECT_FALSE(is_quasisymmetric(p));
}

TEST(Qsym, FundamentalPolynomialsAreQuasisymmetric)
{
    for (unsigned m = 1; m <= 2; ++m)
        for (unsigned n = 0; n <= 3; ++n)
            for (const auto& a : enumerate_compositions(m, n))
                ASSERT_TRUE(is_quasisymmetric(fundamental_polynomial(a, 4))) << render(a);
}
