#include <doctest.h>

#include <sstream>

#include "srkit/cli.hpp"
#include "srkit/io.hpp"
#include "support.hpp"

using namespace srkit;
using namespace srkit::testing;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args, const std::string& input = {})
{
    std::ostringstream out;
    std::ostringstream err;
    std::istringstream in(input);
    args.insert(args.begin(), "srkit");
    const int code = cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& text, std::string_view needle)
{
    return text.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("analyze the 4-cycle from stdin")
{
    const Invocation r = invoke({"analyze", "-"}, to_src(four_cycle()));
    REQUIRE(r.code == cli::kOk);
    CHECK(contains(r.out, "n=4 d=2 c=2 e=4"));
    CHECK(contains(r.out, "indeg=2 rt=2 mu=2 bight=2"));
    CHECK(contains(r.out, "reg=2 pd=2 linear=no"));
    CHECK(contains(r.out, "CM=yes"));
    CHECK(contains(r.out, "h1=1"));
}

TEST_CASE("analyze inline facets in JSON")
{
    const Invocation r = invoke({"analyze", "--facets", "1 2 4; 1 3 5; 2 3 4; 2 4 5", "--format", "json", "--field", "Q"});
    REQUIRE(r.code == cli::kOk);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["invariants"]["indeg"] == 3);
    CHECK(j["invariants"]["multiplicity"] == 4);
    CHECK(j.contains("betti"));
    CHECK(j.contains("linear_resolution"));

    const Invocation text = invoke({"analyze", "--facets", "1 2 4; 1 3 5; 2 3 4; 2 4 5", "--field", "Q"});
    CHECK(contains(text.out, "n=5 d=3 c=2 e=4"));
    CHECK(contains(text.out, "linear=yes"));
}

TEST_CASE("dual round trip")
{
    const Invocation once = invoke({"dual", "-"}, to_src(four_cycle()));
    REQUIRE(once.code == cli::kOk);
    CHECK(parse_src(once.out) == facets_of(4, {{1, 3}, {2, 4}}));
    const Invocation twice = invoke({"dual", "-"}, once.out);
    CHECK(parse_src(twice.out) == four_cycle());
}

TEST_CASE("betti subcommand")
{
    const Invocation r = invoke({"betti", "--facets", "1 2; 2 3; 3 4; 1 4"});
    REQUIRE(r.code == cli::kOk);
    CHECK(contains(r.out, "1: . 2 ."));
}

TEST_CASE("exit codes")
{
    CHECK(invoke({"analyze", "-"}, "n 3\n1 x\n").code == cli::kParseFailure);
    CHECK(contains(invoke({"analyze", "-"}, "n 3\n1 x\n").err, "line 2, column 3"));
    const Invocation unknown = invoke({"verify", "bogus"});
    CHECK(unknown.code == cli::kUsageFailure);
    CHECK(contains(unknown.err + unknown.out, "thm-main1"));
    CHECK(invoke({"analyze", "--n", "22", "--facets", "1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22"}).code ==
          cli::kGuardFailure);
    CHECK(invoke({"enumerate", "--n", "7"}).code == cli::kGuardFailure);
    CHECK(invoke({"enumerate", "--n", "4", "--e-min", "3", "--e-max", "2"}).code == cli::kUsageFailure);
    CHECK(invoke({"no-such-command"}).code == cli::kUsageFailure);
    CHECK(invoke({"example", "puredual-T", "d=4", "e=6"}).code == cli::kCounterexample);
    CHECK(invoke({"example", "nope"}).code == cli::kUsageFailure);
}

TEST_CASE("enumerate counts")
{
    const Invocation r = invoke({"enumerate", "--n", "5", "--count"});
    REQUIRE(r.code == cli::kOk);
    CHECK(contains(r.out, "180"));
    const Invocation labeled = invoke({"enumerate", "--n", "4", "--labeled", "--allow-missing-vertices", "--count"});
    CHECK(contains(labeled.out, "167"));
}

TEST_CASE("verify and claims")
{
    const Invocation pass = invoke({"verify", "thm-key", "--n-max", "6"});
    CHECK(pass.code == cli::kOk);
    CHECK(contains(pass.out, "PASS"));
    const Invocation fail = invoke({"verify", "prop-pure", "--n-max", "5", "--d-max", "2", "--field", "2"});
    CHECK(fail.code == cli::kCounterexample);
    CHECK(contains(fail.out, "COUNTEREXAMPLE"));
    const Invocation list = invoke({"claims"});
    CHECK(list.code == cli::kOk);
    CHECK(contains(list.out, "thm-eagon-reiner"));
}

TEST_CASE("turan subcommand")
{
    const Invocation r = invoke({"turan", "5", "3", "2"});
    REQUIRE(r.code == cli::kOk);
    CHECK(contains(r.out, "6"));
    CHECK(invoke({"turan", "12", "3", "2"}).code == cli::kGuardFailure);
}
