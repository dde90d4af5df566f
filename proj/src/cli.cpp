#include "srkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "srkit/betti.hpp"
#include "srkit/claims.hpp"
#include "srkit/enumeration.hpp"
#include "srkit/errors.hpp"
#include "srkit/families.hpp"
#include "srkit/homology.hpp"
#include "srkit/io.hpp"
#include "srkit/ring_props.hpp"

namespace srkit::cli {

namespace {

struct InputOptions {
    std::string path;
    std::string facets;
    std::optional<int> n;
};

struct CommonOptions {
    std::vector<std::string> fields;
    std::string format = "text";
    int jobs = 1;
    std::optional<std::uint64_t> max_subsets;
};

struct RangeOptions {
    std::optional<int> n_min;
    std::optional<int> n_max;
    std::optional<int> d_min;
    std::optional<int> d_max;
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 1;
};

struct EnumerateOptions {
    int n = 0;
    std::optional<int> dim;
    bool pure = false;
    std::optional<int> indeg;
    std::optional<int> rt_max;
    std::optional<int> rt_exact;
    std::optional<std::uint64_t> e_min;
    std::optional<std::uint64_t> e_max;
    bool labeled = false;
    bool allow_missing_vertices = false;
    bool count_only = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_input(CLI::App* cmd, InputOptions& input)
{
    cmd->add_option("input", input.path, "SRC v1 or JSON file; '-' reads standard input");
    cmd->add_option("--facets", input.facets, "inline facets, e.g. \"1 2 4; 1 3 5\"");
    cmd->add_option("--n", input.n, "vertex count for --facets (default: largest vertex)");
}

void add_format(CLI::App* cmd, CommonOptions& common)
{
    cmd->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_field(CLI::App* cmd, CommonOptions& common, const std::string& help)
{
    cmd->add_option("--field", common.fields, help);
}

void add_limits(CLI::App* cmd, CommonOptions& common)
{
    cmd->add_option("--jobs", common.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-subsets", common.max_subsets,
                    "cap on restrictions swept by Hochster's formula (env SRKIT_MAX_SUBSETS)");
}

void add_ranges(CLI::App* cmd, RangeOptions& ranges)
{
    cmd->add_option("--n-min", ranges.n_min, "smallest vertex count");
    cmd->add_option("--n-max", ranges.n_max, "largest vertex count");
    cmd->add_option("--d-min", ranges.d_min, "smallest dimension d");
    cmd->add_option("--d-max", ranges.d_max, "largest dimension d");
    cmd->add_option("--samples", ranges.samples, "random samples (claims that use them)");
    cmd->add_option("--seed", ranges.seed, "random seed");
}

std::string read_stream(std::istream& in)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SimplicialComplex load_complex(const InputOptions& input, std::istream& in)
{
    const bool has_path = !input.path.empty();
    const bool has_inline = !input.facets.empty();
    if (has_path == has_inline)
        throw UsageError("give exactly one of an input path or --facets");
    if (has_inline)
        return parse_inline_facets(input.facets, input.n);
    if (input.path == "-")
        return parse_complex(read_stream(in));
    std::ifstream file(input.path);
    if (!file)
        throw UsageError("cannot open '" + input.path + "'");
    return parse_complex(read_stream(file));
}

FieldSpec single_field(const CommonOptions& common)
{
    if (common.fields.empty())
        return kGF2;
    if (common.fields.size() > 1)
        throw UsageError("this command takes a single --field");
    return FieldSpec::parse(common.fields.front());
}

std::vector<FieldSpec> field_list(const CommonOptions& common)
{
    std::vector<FieldSpec> out;
    for (const auto& f : common.fields)
        out.push_back(FieldSpec::parse(f));
    return out;
}

std::uint64_t max_subsets(const CommonOptions& common)
{
    if (common.max_subsets)
        return *common.max_subsets;
    if (const char* env = std::getenv("SRKIT_MAX_SUBSETS")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("SRKIT_MAX_SUBSETS is not a number: '") + env + "'");
        }
    }
    return kDefaultMaxSubsets;
}

HochsterOptions hochster_options(const CommonOptions& common)
{
    HochsterOptions options;
    options.max_subsets = max_subsets(common);
    options.jobs = common.jobs;
    return options;
}

std::string yes_no(bool v)
{
    return v ? "yes" : "no";
}

std::string join_numbers(const std::vector<std::uint64_t>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? " " : "") + std::to_string(values[i]);
    return out;
}

// ---------------------------------------------------------------- analyze

// Homology and Reisner's criterion walk every face; refuse complexes whose
// face count bound sum_F 2^|F| exceeds the subset cap.
void check_face_count(const SimplicialComplex& complex, std::uint64_t cap)
{
    std::uint64_t bound = 0;
    for (VertexSet f : complex.facets()) {
        if (f.size() >= 63 || (bound += std::uint64_t{1} << f.size()) > cap)
            throw GuardError("the complex may have more than " + std::to_string(cap) +
                             " faces; raise --max-subsets to analyze it");
    }
}

int cmd_analyze(const InputOptions& input, const CommonOptions& common, std::ostream& out, std::istream& in)
{
    const SimplicialComplex complex = load_complex(input, in);
    const FieldSpec field = single_field(common);
    check_face_count(complex, max_subsets(common));
    const InvariantSummary summary = invariants(complex);
    const HomologyProfile homology = reduced_homology(complex, field);
    const BettiTable betti = hochster_betti(complex, field, hochster_options(common));
    const RingStatus status = is_cohen_macaulay(complex, field);
    const bool full = complex.is_full_simplex();
    const bool linear = !full && betti.regularity() == betti.indeg() - 1;

    if (common.format == "json") {
        nlohmann::json doc = {{"complex", complex_to_json(complex)},
                              {"invariants", invariants_to_json(summary)},
                              {"homology", homology_to_json(homology)},
                              {"betti", betti_to_json(betti)},
                              {"ring", ring_status_to_json(status)},
                              {"linear_resolution", linear}};
        out << doc.dump(2) << "\n";
        return kOk;
    }
    out << "n=" << summary.n << " d=" << summary.dim_ring << " c=" << summary.codim << " e=" << summary.multiplicity
        << "\n";
    out << "f-vector " << join_numbers(summary.f_vector) << "\n";
    out << "pure=" << yes_no(summary.is_pure) << " vertex-full=" << yes_no(summary.vertex_full) << "\n";
    out << "indeg=" << degree_text(summary.indeg) << " rt=" << degree_text(summary.rt) << " mu=" << summary.mu
        << " bight=" << summary.bight << "\n";
    out << "field " << field.name() << "\n";
    out << "reduced homology";
    for (int i = -1; i <= homology.top_index(); ++i)
        out << " h" << i << "=" << homology.at(i);
    out << "\n";
    out << "reg=" << betti.regularity() << " pd=" << betti.projective_dimension() << " linear=" << yes_no(linear)
        << "\n";
    out << "CM=" << yes_no(status.is_cm) << " Buchsbaum=" << yes_no(status.is_buchsbaum)
        << " hypersurface=" << yes_no(status.is_hypersurface) << "\n";
    if (status.failing_witness)
        out << "CM witness: link of " << status.failing_witness->face.to_string() << " has H~_"
            << status.failing_witness->index << " != 0\n";
    if (status.d2_connected)
        out << "connected=" << yes_no(*status.d2_connected) << "\n";
    out << "Betti table (rows i, columns j - i)\n" << betti.to_text();
    return kOk;
}

int cmd_dual(const InputOptions& input, const CommonOptions& common, std::ostream& out, std::istream& in)
{
    const SimplicialComplex complex = load_complex(input, in);
    if (complex.is_full_simplex())
        throw UsageError("the full simplex has no Alexander dual");
    const SimplicialComplex dual = alexander_dual(complex);
    if (common.format == "json")
        out << complex_to_json(dual).dump() << "\n";
    else
        out << to_src(dual);
    return kOk;
}

int cmd_betti(const InputOptions& input, const CommonOptions& common, std::ostream& out, std::istream& in)
{
    const SimplicialComplex complex = load_complex(input, in);
    const BettiTable betti = hochster_betti(complex, single_field(common), hochster_options(common));
    if (common.format == "json") {
        out << betti_to_json(betti).dump(2) << "\n";
        return kOk;
    }
    out << "field " << betti.field().name() << "\n";
    out << "reg=" << betti.regularity() << " indeg=" << degree_text(betti.indeg()) << " rt=" << degree_text(betti.rt())
        << " pd=" << betti.projective_dimension() << "\n";
    out << betti.to_text();
    return kOk;
}

// -------------------------------------------------------------- enumerate

int cmd_enumerate(const EnumerateOptions& opts, const CommonOptions& common, std::ostream& out)
{
    EnumFilter filter;
    filter.n = opts.n;
    filter.require_vertex_full = !opts.allow_missing_vertices;
    filter.dim_ring = opts.dim;
    if (opts.pure)
        filter.pure = true;
    filter.indeg_exact = opts.indeg;
    filter.rt_max = opts.rt_max;
    filter.rt_exact = opts.rt_exact;
    filter.e_min = opts.e_min;
    filter.e_max = opts.e_max;
    filter.up_to_iso = !opts.labeled;
    try {
        validate(filter);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    EnumOptions options;
    options.jobs = common.jobs;
    const std::vector<SimplicialComplex> complexes = enumerate_complexes(filter, options);
    if (opts.count_only) {
        if (common.format == "json")
            out << nlohmann::json{{"count", complexes.size()}}.dump() << "\n";
        else
            out << complexes.size() << "\n";
        return kOk;
    }
    if (common.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : complexes)
            list.push_back(complex_to_json(c));
        out << list.dump() << "\n";
    } else {
        out << to_src_documents(complexes);
    }
    return kOk;
}

// ----------------------------------------------------------------- claims

SweepRanges sweep_ranges(const RangeOptions& ranges, const CommonOptions& common)
{
    SweepRanges out;
    out.n_min = ranges.n_min;
    out.n_max = ranges.n_max;
    out.d_min = ranges.d_min;
    out.d_max = ranges.d_max;
    out.samples = ranges.samples;
    out.seed = ranges.seed;
    out.jobs = common.jobs;
    out.max_subsets = max_subsets(common);
    return out;
}

std::string valid_ids()
{
    std::string out;
    for (const auto& id : claim_ids())
        out += "  " + id + "\n";
    return out;
}

int exit_for(Outcome outcome)
{
    switch (outcome) {
    case Outcome::Pass:
        return kOk;
    case Outcome::Counterexample:
        return kCounterexample;
    case Outcome::Skipped:
        return kGuardFailure;
    }
    return kGuardFailure;
}

int cmd_verify(const std::string& id, const RangeOptions& ranges, const CommonOptions& common, std::ostream& out,
               std::ostream& err)
{
    if (find_claim(id) == nullptr) {
        err << "unknown claim id '" << id << "'; valid ids:\n" << valid_ids();
        return kUsageFailure;
    }
    const VerificationReport report = verify(id, sweep_ranges(ranges, common), field_list(common));
    if (common.format == "json")
        out << report.to_json().dump(2) << "\n";
    else
        out << report.to_text();
    return exit_for(report.outcome);
}

int cmd_reproduce(const CommonOptions& common, std::ostream& out)
{
    SweepRanges ranges;
    ranges.jobs = common.jobs;
    ranges.max_subsets = max_subsets(common);
    const std::vector<FieldSpec> fields = field_list(common);
    std::vector<VerificationReport> reports;
    for (const auto& claim : claim_registry())
        reports.push_back(verify(claim.id, ranges, fields));

    std::size_t passed = 0;
    for (const auto& r : reports)
        passed += r.outcome == Outcome::Pass ? 1 : 0;
    const bool all_pass = passed == reports.size();

    if (common.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : reports)
            rows.push_back(r.to_json());
        out << nlohmann::json{{"claims", rows}, {"passed", passed}, {"total", reports.size()}, {"all_pass", all_pass}}
                   .dump(2)
            << "\n";
        return all_pass ? kOk : kCounterexample;
    }

    char line[256];
    std::snprintf(line, sizeof line, "%-18s %-26s %-15s %9s %9s\n", "claim", "anchor", "result", "checked", "time");
    out << line;
    for (const auto& r : reports) {
        char time[32];
        std::snprintf(time, sizeof time, "%.2fs", r.seconds);
        std::snprintf(line, sizeof line, "%-18s %-26s %-15s %9llu %9s\n", r.claim_id.c_str(),
                      r.anchor.label.c_str(), to_string(r.outcome).c_str(),
                      static_cast<unsigned long long>(r.checked), time);
        out << line;
    }
    out << passed << "/" << reports.size() << " PASS\n";
    for (const auto& r : reports) {
        if (r.outcome == Outcome::Pass)
            continue;
        out << "\n" << r.to_text();
    }
    return all_pass ? kOk : kCounterexample;
}

int cmd_claims(const CommonOptions& common, std::ostream& out)
{
    if (common.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : claim_registry())
            list.push_back({{"id", c.id},
                            {"summary", c.statement_summary},
                            {"anchor", {{"label", c.anchor.label}, {"quote", c.anchor.quote}}},
                            {"field_dependent", c.field_dependent}});
        out << list.dump(2) << "\n";
        return kOk;
    }
    for (const auto& c : claim_registry())
        out << c.id << "  [" << c.anchor.label << "]  " << c.statement_summary << "\n";
    return kOk;
}

// ---------------------------------------------------------------- example

std::map<std::string, int> parse_params(const std::vector<std::string>& params)
{
    std::map<std::string, int> out;
    for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("parameter '" + p + "' is not key=value");
        try {
            std::size_t used = 0;
            const int value = std::stoi(p.substr(eq + 1), &used);
            if (used != p.size() - eq - 1)
                throw std::invalid_argument(p);
            out[p.substr(0, eq)] = value;
        } catch (const std::exception&) {
            throw UsageError("parameter '" + p + "' needs an integer value");
        }
    }
    return out;
}

int cmd_example(const std::string& id, const std::vector<std::string>& params, const CommonOptions& common,
                std::ostream& out, std::ostream& err)
{
    std::optional<SimplicialComplex> complex;
    try {
        complex = build_example(id, parse_params(params));
    } catch (const std::invalid_argument& e) {
        err << "example: " << e.what() << "\nknown examples:";
        for (const auto& known : example_ids())
            err << " " << known;
        err << "\n";
        return kUsageFailure;
    } catch (const std::logic_error& e) {
        err << "example " << id << ": " << e.what() << "\n";
        return kCounterexample;
    }
    if (common.format == "json")
        out << complex_to_json(*complex).dump() << "\n";
    else
        out << to_src(*complex);
    return kOk;
}

int cmd_turan(int n, int p, int k, const CommonOptions& common, std::ostream& out)
{
    if (n < 1 || k < 1 || p <= k || p > n)
        throw UsageError("turan needs 1 <= k < p <= n");
    const TuranRecord t = turan(n, p, k);
    if (common.format == "json") {
        out << nlohmann::json{{"n", n}, {"p", p}, {"k", k}, {"extremal", t.extremal},
                              {"turan_number", t.turan_number}, {"binomial", binomial(n, k)}}
                   .dump()
            << "\n";
        return kOk;
    }
    out << "n=" << n << " p=" << p << " k=" << k << " C(n,k)=" << binomial(n, k) << " extremal=" << t.extremal
        << " turan_number=" << t.turan_number << "\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in)
{
    CLI::App app{"Stanley-Reisner rings of small simplicial complexes", "srkit"};
    app.require_subcommand(1);

    InputOptions input;
    CommonOptions common;
    RangeOptions ranges;
    EnumerateOptions enum_opts;
    std::string claim_id;
    std::string example_id;
    std::vector<std::string> example_params;
    int tn = 0;
    int tp = 0;
    int tk = 0;

    auto* analyze = app.add_subcommand("analyze", "invariants, homology, Betti table and ring properties");
    add_input(analyze, input);
    add_field(analyze, common, "coefficient field: a prime or q (default 2)");
    add_format(analyze, common);
    add_limits(analyze, common);

    auto* dual = app.add_subcommand("dual", "Alexander dual as SRC v1");
    add_input(dual, input);
    add_format(dual, common);

    auto* betti = app.add_subcommand("betti", "graded Betti numbers by Hochster's formula");
    add_input(betti, input);
    add_field(betti, common, "coefficient field: a prime or q (default 2)");
    add_format(betti, common);
    add_limits(betti, common);

    auto* enumerate = app.add_subcommand("enumerate", "complexes on [n] in a hypothesis region");
    enumerate->add_option("--n", enum_opts.n, "vertex count")->required();
    enumerate->add_option("--dim", enum_opts.dim, "Krull dimension d = dim + 1");
    enumerate->add_flag("--pure", enum_opts.pure, "pure complexes only");
    enumerate->add_option("--indeg", enum_opts.indeg, "exact initial degree");
    enumerate->add_option("--rt-max", enum_opts.rt_max, "largest allowed relation type");
    enumerate->add_option("--rt", enum_opts.rt_exact, "exact relation type");
    enumerate->add_option("--e-min", enum_opts.e_min, "smallest multiplicity");
    enumerate->add_option("--e-max", enum_opts.e_max, "largest multiplicity");
    enumerate->add_flag("--labeled", enum_opts.labeled, "list labeled complexes instead of isomorphism classes");
    enumerate->add_flag("--allow-missing-vertices", enum_opts.allow_missing_vertices,
                        "include complexes missing some vertex of [n]");
    enumerate->add_flag("--count", enum_opts.count_only, "print only the number of complexes");
    add_format(enumerate, common);
    add_limits(enumerate, common);

    auto* verify_cmd = app.add_subcommand("verify", "run one claim verifier");
    verify_cmd->add_option("claim", claim_id, "claim id (see `srkit claims`)")->required();
    add_field(verify_cmd, common, "field to sweep; repeatable (default: 2, 3 and q)");
    add_format(verify_cmd, common);
    add_limits(verify_cmd, common);
    add_ranges(verify_cmd, ranges);

    auto* reproduce = app.add_subcommand("reproduce-paper", "run every claim at its default sweep");
    add_field(reproduce, common, "field to sweep; repeatable (default: 2, 3 and q)");
    add_format(reproduce, common);
    add_limits(reproduce, common);

    auto* claims = app.add_subcommand("claims", "list claim ids");
    add_format(claims, common);

    auto* example = app.add_subcommand("example", "build a named example complex");
    example->add_option("id", example_id, "example id")->required();
    example->add_option("params", example_params, "key=value parameters");
    add_format(example, common);

    auto* turan_cmd = app.add_subcommand("turan", "Turan data for k-sets of [n] avoiding complete p-sets");
    turan_cmd->add_option("n", tn)->required();
    turan_cmd->add_option("p", tp)->required();
    turan_cmd->add_option("k", tk)->required();
    add_format(turan_cmd, common);

    std::vector<std::string> argv_store = args;
    if (argv_store.empty())
        argv_store.emplace_back("srkit");
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageFailure;
    }

    try {
        if (*analyze)
            return cmd_analyze(input, common, out, in);
        if (*dual)
            return cmd_dual(input, common, out, in);
        if (*betti)
            return cmd_betti(input, common, out, in);
        if (*enumerate)
            return cmd_enumerate(enum_opts, common, out);
        if (*verify_cmd)
            return cmd_verify(claim_id, ranges, common, out, err);
        if (*reproduce)
            return cmd_reproduce(common, out);
        if (*claims)
            return cmd_claims(common, out);
        if (*example)
            return cmd_example(example_id, example_params, common, out, err);
        if (*turan_cmd)
            return cmd_turan(tn, tp, tk, common, out);
    } catch (const ParseError& e) {
        err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
        return kParseFailure;
    } catch (const GuardError& e) {
        err << "resource guard: " << e.what() << "\n";
        return kGuardFailure;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return kUsageFailure;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return kUsageFailure;
    }
    return kUsageFailure;
}

} // namespace srkit::cli
