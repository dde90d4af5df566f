#ifndef SRKIT_CLAIMS_HPP
#define SRKIT_CLAIMS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "srkit/betti.hpp"
#include "srkit/complex.hpp"
#include "srkit/enumeration.hpp"
#include "srkit/field.hpp"

namespace srkit {

/// Theorem label plus the verbatim phrase the claim is anchored to.
struct Anchor {
    std::string label;
    std::string quote;
};

/// Default sweep box of a claim. d_max = 0 means "up to n".
struct SweepDefaults {
    int n_min = 2;
    int n_max = 6;
    int d_min = 2;
    int d_max = 0;
    std::uint64_t samples = 0;
    /// Free-form qualifiers appended to the sweep description.
    std::string scope;
};

/// Caller overrides of the default sweep box and resource limits.
struct SweepRanges {
    std::optional<int> n_min;
    std::optional<int> n_max;
    std::optional<int> d_min;
    std::optional<int> d_max;
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::uint64_t max_search = kDefaultSearchBound;
    std::uint64_t max_subsets = kDefaultMaxSubsets;
};

/// Failure detail, or nullopt when the complex is consistent with the claim.
using ComplexCheck = std::function<std::optional<std::string>(const SimplicialComplex&, FieldSpec)>;

struct ClaimContext;

struct ClaimRecord {
    std::string id;
    std::string statement_summary;
    Anchor anchor;
    SweepDefaults defaults;
    /// Whether the conclusion depends on the coefficient field.
    bool field_dependent = true;
    /// Hypothesis region for (n, d); nullopt when no complex qualifies.
    std::function<std::optional<EnumFilter>(int n, int d)> hypothesis;
    /// Hypothesis conjuncts an EnumFilter cannot express.
    std::function<bool(const SimplicialComplex&)> extra_hypothesis;
    /// The conclusion on one admitted complex.
    ComplexCheck conclusion;
    /// Whole-claim check of a single complex (used to re-verify reported
    /// counterexamples); covers every single-complex assertion of the claim.
    ComplexCheck refutes;
    /// Custom sweep; when empty the hypothesis region is swept with `conclusion`.
    std::function<void(ClaimContext&)> run;
};

enum class Outcome { Pass, Counterexample, Skipped };

std::string to_string(Outcome outcome);

struct Counterexample {
    /// SRC v1 text; empty when the failure is not witnessed by one complex.
    std::string src;
    std::optional<FieldSpec> field;
    std::string detail;
};

struct VerificationReport {
    std::string claim_id;
    std::string summary;
    Anchor anchor;
    std::string sweep;
    std::vector<FieldSpec> fields;
    std::uint64_t checked = 0;
    Outcome outcome = Outcome::Pass;
    std::optional<Counterexample> counterexample;
    std::string skip_reason;
    std::vector<std::string> notes;
    double seconds = 0.0;

    std::string to_text(bool include_time = true) const;
    nlohmann::json to_json(bool include_time = true) const;
};

/// Resolved sweep box and shared state handed to a claim's sweep.
struct ClaimContext {
    const ClaimRecord& claim;
    int n_min;
    int n_max;
    int d_min;
    int d_max;
    std::uint64_t samples;
    std::uint64_t seed;
    std::vector<FieldSpec> fields;
    EnumOptions enum_options;
    HochsterOptions hochster;
    VerificationReport& report;

    bool failed() const { return report.outcome == Outcome::Counterexample; }
    /// Records the first failure; later calls are ignored.
    void fail(const SimplicialComplex* complex, std::optional<FieldSpec> field, std::string detail);
    void note(std::string text) { report.notes.push_back(std::move(text)); }

    /// Fields the conclusion is evaluated over (one placeholder entry for
    /// field-independent claims).
    std::vector<FieldSpec> check_fields() const;
    /// Evaluates `check` on every complex and field, recording the first
    /// failure in (complex, field) order. Adds complexes.size() to checked.
    void check_all(const std::vector<SimplicialComplex>& complexes, const ComplexCheck& check);
    /// The complexes of the hypothesis region for one (n, d).
    std::vector<SimplicialComplex> region(int n, int d) const;
};

const std::vector<ClaimRecord>& claim_registry();
const ClaimRecord* find_claim(std::string_view id);
std::vector<std::string> claim_ids();

/// Runs one claim. Empty `fields` selects GF(2), GF(3), Q. Throws
/// std::invalid_argument for unknown ids; guard and range problems yield
/// a SKIPPED report.
VerificationReport verify(std::string_view id, const SweepRanges& ranges = {}, std::vector<FieldSpec> fields = {});

/// Parses a reported counterexample and re-runs the claim's check on it.
/// True when the failure reproduces.
bool recheck(const VerificationReport& report);

/// All vertex-full complexes on [n] up to isomorphism with their
/// invariants; computed once per process and shared across claims.
struct CatalogEntry {
    SimplicialComplex complex;
    InvariantSummary summary;
};
const std::vector<CatalogEntry>& vertex_full_catalog(int n, int jobs = 1);

} // namespace srkit

#endif
