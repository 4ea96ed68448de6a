// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All bounds are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "colcomp/colcomp.hpp"

using namespace colcomp;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
    void require(const SweepResult& r, const std::string& what)
    {
        if (!r)
            fail(what + ": " + r.counterexample);
    }
};

ColoredComposition comp(unsigned m, std::string_view text) { return parse_composition(text, m); }

std::uint64_t power(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// 1. |Comp^(m)(n)| = m(m+1)^(n-1), m in 1..4, n <= 8
Outcome counting()
{
    Outcome o;
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 0; n <= 8; ++n) {
            const std::uint64_t expected = n == 0 ? 1 : m * power(m + 1, n - 1);
            const auto got = enumerate_compositions(m, n).size();
            if (got != expected)
                o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " got " + std::to_string(got));
        }
    return o;
}

// 2. every alpha of weight n has m(n+1) up-covers, m in 1..3, n <= 6
Outcome cover_degree()
{
    Outcome o;
    for (unsigned m = 1; m <= 3; ++m) {
        o.require(verify_covers(m, 6), "m=" + std::to_string(m));
        for (unsigned n = 0; n <= 6; ++n)
            for (const auto& a : enumerate_compositions(m, n))
                if (up_covers(a).size() != m * (n + 1))
                    o.fail(render(a) + " has " + std::to_string(up_covers(a).size()) + " up-covers");
    }
    return o;
}

// 3. chain_of_permutation is a bijection onto saturated chains, inverted by
// permutation_of_chain, for (2, n <= 5) and (3, n <= 4)
Outcome bijection()
{
    Outcome o;
    const std::vector<std::pair<unsigned, unsigned>> ranges{{2, 5}, {3, 4}};
    for (auto [m, n_max] : ranges)
        for (unsigned n = 0; n <= n_max; ++n) {
            const std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            const auto r = verify_bijection(m, n);
            o.require(r, tag);
            std::uint64_t chains = 0;
            for (const auto& a : enumerate_compositions(m, n))
                chains += count_chains_from_empty(a);
            if (chains != count_permutations(m, n) || r.checked != chains)
                o.fail(tag + ": " + std::to_string(chains) + " chains");
        }
    std::uint64_t chains = 0;
    for (const auto& a : enumerate_compositions(2, 5))
        chains += count_chains_from_empty(a);
    if (chains != 3840)
        o.fail("m=2 n=5 has " + std::to_string(chains) + " chains, expected 3840");
    return o;
}

// 4. golden strings
Outcome golden()
{
    Outcome o;
    const auto u = parse_permutation("1c0,2c1,3c1,4c0,8c1,5c1,7c0,6c0", 2);
    const auto c = colored_descent_composition(u);
    if (render(c) != "1c0,2c1,1c0,1c1,1c1,1c0,1c0")
        o.fail("C(u) = " + render(c));
    if (render_pretty(c) != "(1, 2̄, 1, 1̄, 1̄, 1, 1)")
        o.fail("pretty C(u) = " + render_pretty(c));

    const auto w = parse_permutation("2c1,1c0,7c0,6c1,3c1,4c1,5c0,8c0", 2);
    const std::vector<std::string> expected{
        "1c0",
        "1c1,1c0",
        "1c1,1c0,1c1",
        "1c1,1c0,2c1",
        "1c1,1c0,2c1,1c0",
        "1c1,1c0,1c1,2c1,1c0",
        "1c1,2c0,1c1,2c1,1c0",
        "1c1,2c0,1c1,2c1,2c0",
    };
    const Chain chain = chain_of_permutation(w);
    std::vector<std::string> got;
    for (std::size_t i = 1; i < chain.size(); ++i)
        got.push_back(render(chain[i]));
    if (got != expected)
        o.fail("chain of " + render(w) + " differs");
    if (permutation_of_chain(chain) != w)
        o.fail("chain of " + render(w) + " does not invert");
    return o;
}

// 5. Pieri rule for m = 2 (|alpha| <= 4) and m = 3 (|alpha| <= 3) at
// N = |alpha| + 1; shuffle product for |u| + |v| <= 4, m <= 2
Outcome pieri_and_shuffle()
{
    Outcome o;
    const std::vector<std::pair<unsigned, unsigned>> ranges{{2, 4}, {3, 3}};
    for (auto [m, n_max] : ranges)
        for (unsigned n = 0; n <= n_max; ++n)
            for (const auto& a : enumerate_compositions(m, n))
                if (!verify_pieri(a, n + 1))
                    o.fail("Pieri fails at " + render(a));
    for (unsigned m = 1; m <= 2; ++m)
        o.require(verify_shuffle_sweep(m, 4), "shuffle m=" + std::to_string(m));
    return o;
}

// 6. CL property on every interval with |alpha| <= 5, m <= 3, plus the two
// worked labels in [3, 2 2 1̄ 2]
Outcome cl_property()
{
    Outcome o;
    for (unsigned m = 1; m <= 3; ++m)
        o.require(verify_cl_sweep(m, 5), "m=" + std::to_string(m));

    const Label want0{{1, 1}, {1, 1}, {2, 1}, {3, 2}};
    const Label want1{{2, 1}, {1, 3}, {3, 1}, {1, 3}};
    const Chain c0{comp(2, "2c0,2c0,1c1,2c0"), comp(2, "1c0,2c0,1c1,2c0"), comp(2, "2c0,1c1,2c0"),
                   comp(2, "1c0,1c1,2c0"), comp(2, "3c0")};
    const Chain c1{comp(2, "2c0,2c0,1c1,2c0"), comp(2, "2c0,1c0,1c1,2c0"), comp(2, "2c0,1c1,2c0"),
                   comp(2, "2c0,2c0"), comp(2, "3c0")};
    if (label_chain(c0).label != want0)
        o.fail("label of the lexicographically first chain differs");
    if (label_chain(c1).label != want1)
        o.fail("label of the second worked chain differs");
    const auto first = lex_first_chain(comp(2, "3c0"), comp(2, "2c0,2c0,1c1,2c0"));
    if (first.chain != c0 || first.label != want0)
        o.fail("lex_first_chain of the worked interval differs");
    return o;
}

// 7. closed form, decreasing-chain count and recursion agree on [empty, alpha];
// labels and recursion agree on every [beta, alpha]; |alpha| <= 5, m <= 3
Outcome mobius()
{
    Outcome o;
    for (unsigned m = 1; m <= 3; ++m)
        o.require(verify_mobius_sweep(m, 5), "m=" + std::to_string(m));
    return o;
}

// 8. mu(empty, 1^) = (-1)^(n+1) (m-1)^n, m in 2..3, n <= 4
Outcome truncated()
{
    Outcome o;
    for (unsigned m = 2; m <= 3; ++m)
        for (unsigned n = 1; n <= 4; ++n) {
            const auto t = truncated_mobius(m, n);
            const std::int64_t formula = (n % 2 == 1 ? 1 : -1) * static_cast<std::int64_t>(power(m - 1, n));
            if (t.value != formula)
                o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " got " + std::to_string(t.value));
        }
    return o;
}

std::string join(const auto& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

// 9. unsigned rank sums m(m-1)^(n-1) with series (1+t)/(1-(m-1)t), signed sums
// from the recursion with series (1-t)/(1+(m-1)t); m in 2..3, n <= 6
Outcome series(std::string& report)
{
    Outcome o;
    for (unsigned m = 2; m <= 3; ++m) {
        o.require(verify_series(m, 6), "m=" + std::to_string(m));
        const auto s = mobius_series(m, 6);
        const auto m1 = static_cast<std::int64_t>(m) - 1;
        const auto plus = series_coefficients({1, 1}, {1, -m1}, 6);
        const auto minus = series_coefficients({1, -1}, {1, m1}, 6);
        for (unsigned n = 0; n <= 6; ++n) {
            const std::uint64_t support = n == 0 ? 1 : m * power(m - 1, n - 1);
            if (s.unsigned_coefficients[n] != support || static_cast<std::int64_t>(support) != plus[n])
                o.fail("unsigned coefficient m=" + std::to_string(m) + " n=" + std::to_string(n));
            if (s.signed_coefficients[n] != minus[n])
                o.fail("signed coefficient m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
        report += "        m=" + std::to_string(m) + " unsigned [" + join(s.unsigned_coefficients) + "] signed ["
                  + join(s.signed_coefficients) + "]\n";
    }
    return o;
}

// 10. (1, 1̄, 1) has 4 down-covers; no length-3 word over <= 4 letters has
// more than 3 subword down-covers
Outcome witness()
{
    Outcome o;
    if (down_covers(comp(2, "1c0,1c1,1c0")).size() != 4)
        o.fail("(1,1̄,1) does not have 4 down-covers");
    for (unsigned a = 1; a <= 4; ++a)
        if (max_subword_down_covers(a, 3) > 3)
            o.fail("alphabet " + std::to_string(a) + " has a word with more than 3 covers");
    o.require(verify_subword_witness(4, 4), "witness sweep");
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> check;
    };
    std::string series_report;
    const std::vector<Criterion> criteria{
        {1, "counting m<=4 n<=8", counting},
        {2, "cover degree m<=3 n<=6", cover_degree},
        {3, "chain bijection (2,<=5) (3,<=4)", bijection},
        {4, "golden descent composition and chain", golden},
        {5, "Pieri rule and shuffle product", pieri_and_shuffle},
        {6, "CL labeling m<=3 |alpha|<=5", cl_property},
        {7, "Moebius agreement m<=3 |alpha|<=5", mobius},
        {8, "truncated poset m in 2..3 n<=4", truncated},
        {9, "Moebius generating series m in 2..3 n<=6", [&] { return series(series_report); }},
        {10, "subword witness alphabet<=4", witness},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  (" << timing << ")";
        if (!o.ok)
            std::cout << "  " << o.detail;
        std::cout << '\n';
        if (c.id == 9)
            std::cout << series_report;
        failures += o.ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
