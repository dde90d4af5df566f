#include <doctest.h>

#include <set>

#include "srkit/claims.hpp"
#include "srkit/io.hpp"
#include "support.hpp"

using namespace srkit;
using namespace srkit::testing;

TEST_CASE("registry")
{
    const auto& registry = claim_registry();
    CHECK(registry.size() == 22);
    std::set<std::string> ids;
    for (const ClaimRecord& claim : registry) {
        ids.insert(claim.id);
        CHECK_FALSE(claim.anchor.label.empty());
        CHECK_FALSE(claim.anchor.quote.empty());
        CHECK_FALSE(claim.statement_summary.empty());
        CHECK(static_cast<bool>(claim.refutes));
        CHECK(find_claim(claim.id) == &claim);
    }
    CHECK(ids.size() == registry.size());
    CHECK(claim_ids().size() == registry.size());
    CHECK(find_claim("no-such-claim") == nullptr);
    CHECK_THROWS_AS(verify("no-such-claim"), std::invalid_argument);
}

TEST_CASE("small sweeps pass")
{
    SweepRanges small;
    small.n_max = 5;
    for (const char* id : {"thm-main1", "lem-indeg", "lem-hyper", "thm-key", "prop-bbm"}) {
        const VerificationReport r = verify(id, small);
        INFO(r.to_text());
        CHECK(r.outcome == Outcome::Pass);
        CHECK(r.checked > 0);
    }
    SweepRanges examples;
    examples.d_max = 4;
    const VerificationReport notlin = verify("ex-notlin", examples);
    CHECK(notlin.outcome == Outcome::Pass);
    CHECK(notlin.checked == 3);
}

TEST_CASE("the pure counterexample is found and reproduces")
{
    SweepRanges box;
    box.n_max = 5;
    box.d_max = 2;
    const VerificationReport r = verify("prop-pure", box, {kGF2});
    REQUIRE(r.outcome == Outcome::Counterexample);
    REQUIRE(r.counterexample);
    const SimplicialComplex witness = parse_src(r.counterexample->src);
    CHECK(witness.vertex_count() == 5);
    CHECK(witness.dim_ring() == 2);
    CHECK(recheck(r));
}

TEST_CASE("invalid boxes are skipped")
{
    SweepRanges inverted;
    inverted.n_min = 6;
    inverted.n_max = 4;
    const VerificationReport r = verify("thm-main1", inverted);
    CHECK(r.outcome == Outcome::Skipped);
    CHECK_FALSE(r.skip_reason.empty());
}

TEST_CASE("text and JSON reports agree")
{
    SweepRanges small;
    small.n_max = 5;
    const VerificationReport r = verify("lem-indeg2", small);
    const nlohmann::json j = r.to_json(false);
    CHECK(j["claim"] == "lem-indeg2");
    CHECK(j["result"] == to_string(r.outcome));
    CHECK(j["checked"] == r.checked);
    const std::string text = r.to_text(false);
    CHECK(text.find(to_string(r.outcome)) != std::string::npos);
    CHECK(text.find(std::to_string(r.checked)) != std::string::npos);
}

TEST_CASE("catalog summaries match direct computation")
{
    const auto& catalog = vertex_full_catalog(5);
    CHECK(catalog.size() == 180);
    for (const CatalogEntry& entry : catalog) {
        const InvariantSummary direct = invariants(entry.complex);
        CHECK(entry.summary.indeg == direct.indeg);
        CHECK(entry.summary.multiplicity == direct.multiplicity);
        CHECK(entry.summary.mu == direct.mu);
    }
}
