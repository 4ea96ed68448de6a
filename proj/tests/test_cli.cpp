#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "")
{
    std::ostringstream out, err;
    std::istringstream in(input);
    const int status = colcomp::cli::run(args, out, err, in);
    return {status, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST(Cli, EnumerateCount)
{
    const auto r = run({"enumerate", "--m", "2", "--n", "2", "--format", "count"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "6\n");
}

TEST(Cli, EnumerateText)
{
    const auto r = run({"enumerate", "--m", "2", "--n", "2"});
    EXPECT_EQ(r.out, "1c0,1c0\n1c0,1c1\n1c1,1c0\n1c1,1c1\n2c0\n2c1\n");
    const auto j = run({"enumerate", "--m", "1", "--n", "2", "--format", "json"});
    EXPECT_EQ(j.out, R"([{"m":1,"parts":[{"color":0,"size":1},{"color":0,"size":1}]},{"m":1,"parts":[{"color":0,"size":2}]}])"
                     "\n");
}

TEST(Cli, CoversDown)
{
    const auto r = run({"covers", "--down", "--m", "2", "--comp", "1c0,1c1,1c0"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "1c0,1c0\n1c0,1c1\n1c1,1c0\n2c0\n");
    EXPECT_EQ(run({"covers", "--m", "3", "--comp", "2c1", "--format", "count"}).out, "9\n");
}

TEST(Cli, Hasse)
{
    const auto r = run({"hasse", "--m", "2", "--n", "1", "--format", "dot"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "digraph {\n  rankdir=BT;\n  \"\" [label=\"∅\"];\n  \"1c0\";\n  \"1c1\";\n"
                     "  \"\" -> \"1c0\";\n  \"\" -> \"1c1\";\n}\n");
}

TEST(Cli, Mobius)
{
    auto r = run({"mobius", "--m", "2", "--to", "1c0,1c1,1c0", "--method", "all"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "-1 -1 -1\n");
    r = run({"mobius", "--m", "2", "--to", "2c0", "--method", "recursion"});
    EXPECT_EQ(r.out, "0\n");
    r = run({"mobius", "--m", "2", "--from", "1c0", "--to", "2c0,1c0"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.substr(0, 4), "n/a ");
    r = run({"mobius", "--m", "2", "--series", "--n", "3"});
    EXPECT_EQ(r.out, "{\"m\":2,\"signed\":[1,-2,2,-2],\"unsigned\":[1,2,2,2]}\n");
}

TEST(Cli, Chains)
{
    const auto r = run({"chains", "--m", "2", "--from", "3c0", "--to", "2c0,2c0,1c1,2c0"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("2c0,2c0,1c1,2c0 > 1c0,2c0,1c1,2c0 > 2c0,1c1,2c0 > 1c0,1c1,2c0 > 3c0 | (1,1) (1,1) (2,1) (3,2)\n"),
              std::string::npos);
    EXPECT_NE(r.out.find("2c0,2c0,1c1,2c0 > 2c0,1c0,1c1,2c0 > 2c0,1c1,2c0 > 2c0,2c0 > 3c0 | (2,1) (1,3) (3,1) (1,3)\n"),
              std::string::npos);
    const auto j = run({"chains", "--m", "2", "--to", "1c1", "--format", "json"});
    EXPECT_EQ(j.out, R"([{"chain":[{"m":2,"parts":[{"color":1,"size":1}]},{"m":2,"parts":[]}],"label":[[1,1]]}])"
                     "\n");
}

TEST(Cli, PermToChainAndBack)
{
    const std::string u = "2c1,1c0,7c0,6c1,3c1,4c1,5c0,8c0";
    const auto chain = run({"perm-to-chain", "--m", "2", "--perm", u});
    EXPECT_EQ(chain.status, 0);
    EXPECT_EQ(lines(chain.out), 8u);
    EXPECT_EQ(chain.out.substr(0, 12), "1c0\n1c1,1c0\n");
    const auto back = run({"chain-to-perm", "--m", "2"}, chain.out);
    EXPECT_EQ(back.status, 0);
    EXPECT_EQ(back.out, u + "\n");

    const auto js = run({"perm-to-chain", "--m", "2", "--perm", u, "--format", "json"});
    const auto back_js = run({"chain-to-perm", "--chain", js.out});
    EXPECT_EQ(back_js.status, 0) << back_js.err;
    EXPECT_EQ(back_js.out, u + "\n");
}

TEST(Cli, RoundTripAllSmallPermutations)
{
    for (unsigned m = 1; m <= 2; ++m)
        for (const auto& u : colcomp::enumerate_permutations(m, 4)) {
            const std::string text = colcomp::render(u);
            const auto chain = run({"perm-to-chain", "--m", std::to_string(m), "--perm", text});
            const auto back = run({"chain-to-perm", "--m", std::to_string(m)}, chain.out);
            ASSERT_EQ(back.out, text + "\n");
        }
}

TEST(Cli, ChainToPermInline)
{
    const auto r = run({"chain-to-perm", "--m", "2", "--chain", "1c1;1c1,1c0"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "1c1,2c0\n");
    EXPECT_EQ(run({"chain-to-perm", "--m", "2", "--chain", "1c1;3c0"}).status, 1);
}

TEST(Cli, Descents)
{
    const auto r = run({"descents", "--m", "2", "--perm", "1c0,2c1,3c1,4c0,8c1,5c1,7c0,6c0"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "color_composition 1c0,2c1,1c0,2c1,2c0\n"
                     "colored_descent_composition 1c0,2c1,1c0,1c1,1c1,1c0,1c0\n"
                     "descent_set 5 7\n");
    const auto t = run({"descents", "--m", "1", "--n", "3"});
    EXPECT_EQ(t.out, "1c0,1c0,1c0 1\n1c0,2c0 2\n2c0,1c0 2\n3c0 1\n");
    EXPECT_EQ(run({"descents", "--m", "3", "--n", "9"}).status, 1);
}

TEST(Cli, Qsym)
{
    const auto r = run({"qsym", "--m", "1", "--comp", "2c0,1c0", "--positions", "3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(lines(r.out), 4u);
}

TEST(Cli, Verify)
{
    auto r = run({"verify", "cl", "--m", "2", "--n", "3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.substr(0, 12), "ok cl m=2 n=");
    r = run({"verify", "truncated", "--m", "2", "--n", "3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(run({"verify", "nonsense", "--m", "2", "--n", "3"}).status, 2);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"enumerate", "--m", "2"}).status, 2);
    EXPECT_EQ(run({"enumerate", "--m", "2", "--n", "2", "--bogus"}).status, 2);
    EXPECT_EQ(run({"enumerate", "--m", "0", "--n", "2"}).status, 2);
    EXPECT_EQ(run({"covers", "--m", "2", "--comp", "1c7"}).status, 2);
    EXPECT_EQ(run({"covers", "--m", "2", "--comp", "1c0", "--up", "--down"}).status, 2);
    EXPECT_EQ(run({"hasse", "--m", "2", "--n", "2", "--format", "json"}).status, 2);
    // [1c1, 3c0] is empty
    const auto bad = run({"mobius", "--m", "2", "--from", "1c1", "--to", "3c0"});
    EXPECT_EQ(bad.status, 1);
    EXPECT_FALSE(bad.err.empty());
    EXPECT_EQ(run({"mobius", "--m", "2", "--from", "1c0", "--to", "2c0", "--method", "closed"}).status, 1);
    EXPECT_EQ(run({"chains", "--m", "2", "--from", "1c1", "--to", "3c0"}).status, 1);
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"chains", "--m", "3", "--to", "1c0,2c2,1c1", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> dot{"hasse", "--m", "3", "--n", "3"};
    EXPECT_EQ(run(dot).out, run(dot).out);
}
