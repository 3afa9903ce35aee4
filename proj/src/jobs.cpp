#include "dyndeg/jobs.hpp"

#include "dyndeg/error.hpp"
#include "dyndeg/monomial.hpp"
#include "dyndeg/oracle.hpp"

#include <algorithm>
#include <set>

namespace dyndeg {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string &field, const std::string &msg) {
    throw InvalidArgument("job field '" + field + "': " + msg);
}

long get_int(const json &v, const std::string &field) {
    if (!v.is_number_integer())
        field_error(field, "expected an integer");
    return v.get<long>();
}

Integer get_bigint(const json &v, const std::string &field) {
    if (v.is_number_integer())
        return Integer(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        Integer out;
        if (out.set_str(v.get<std::string>(), 10) != 0)
            field_error(field, "expected a decimal integer string");
        return out;
    }
    field_error(field, "expected an integer or a decimal integer string");
}

double get_positive(const json &v, const std::string &field) {
    if (!v.is_number())
        field_error(field, "expected a number");
    const double x = v.get<double>();
    if (!(x > 0.0))
        field_error(field, "must be positive");
    return x;
}

Polynomial parse_poly_field(const json &v, const std::vector<std::string> &names,
                            const std::string &field) {
    const int nv = static_cast<int>(names.size());
    if (v.is_string()) {
        try {
            return parse_polynomial(v.get<std::string>(), names);
        } catch (const InvalidArgument &e) {
            field_error(field, e.what());
        }
    }
    if (!v.is_object() || !v.contains("coeffs") || !v.at("coeffs").is_array())
        field_error(field, "expected a polynomial string or an object {\"coeffs\": [[exponents, value], ...]}");
    Polynomial p(nv);
    const auto &terms = v.at("coeffs");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tf = field + ".coeffs[" + std::to_string(t) + "]";
        const auto &term = terms[t];
        if (!term.is_array() || term.size() != 2 || !term[0].is_array())
            field_error(tf, "expected [[exponents...], value]");
        if (static_cast<int>(term[0].size()) != nv)
            field_error(tf, "exponent vector must have " + std::to_string(nv) + " entries");
        Monomial e;
        for (std::size_t i = 0; i < term[0].size(); ++i) {
            const long x = get_int(term[0][i], tf + "[0][" + std::to_string(i) + "]");
            if (x < 0)
                field_error(tf, "negative exponent");
            e.push_back(static_cast<int>(x));
        }
        p.add_term(e, get_bigint(term[1], tf + "[1]"));
    }
    return p;
}

const std::set<std::string> kKnownFields = {
    "type",      "matrix",           "factors",    "components", "fibration_dim",
    "n_max",     "tolerance",        "p_range",    "degree_cap", "seed",
    "count",     "k_max",            "oracle_tolerance"};

} // namespace

JobSpec parse_job(const json &doc) {
    if (!doc.is_object())
        throw InvalidArgument("job document must be a JSON object");
    for (const auto &[key, value] : doc.items())
        if (!kKnownFields.count(key))
            field_error(key, "unknown field");

    JobSpec job;
    if (!doc.contains("type") || !doc.at("type").is_string())
        field_error("type", "required, \"monomial\" or \"rational\"");
    const std::string type = doc.at("type").get<std::string>();
    if (type == "monomial")
        job.kind = MapKind::monomial;
    else if (type == "rational")
        job.kind = MapKind::rational;
    else
        field_error("type", "expected \"monomial\" or \"rational\", got \"" + type + "\"");
    job.n_max = job.kind == MapKind::monomial ? 40 : kDefaultIterations;

    if (doc.contains("fibration_dim") && !doc.at("fibration_dim").is_null())
        job.fibration_dim = static_cast<int>(get_int(doc.at("fibration_dim"), "fibration_dim"));
    if (doc.contains("n_max")) {
        job.n_max = static_cast<int>(get_int(doc.at("n_max"), "n_max"));
        if (job.n_max < 1)
            field_error("n_max", "must be at least 1");
    }
    if (doc.contains("tolerance"))
        job.tolerance = get_positive(doc.at("tolerance"), "tolerance");
    if (doc.contains("oracle_tolerance"))
        job.oracle_tolerance = get_positive(doc.at("oracle_tolerance"), "oracle_tolerance");
    if (doc.contains("degree_cap")) {
        job.degree_cap = static_cast<int>(get_int(doc.at("degree_cap"), "degree_cap"));
        if (job.degree_cap < 1)
            field_error("degree_cap", "must be positive");
    }
    if (doc.contains("seed")) {
        const long s = get_int(doc.at("seed"), "seed");
        if (s < 0)
            field_error("seed", "must be nonnegative");
        job.seed = static_cast<std::uint64_t>(s);
    }
    if (doc.contains("count")) {
        job.count = static_cast<int>(get_int(doc.at("count"), "count"));
        if (job.count < 1)
            field_error("count", "must be positive");
    }
    if (doc.contains("k_max")) {
        job.k_max = static_cast<int>(get_int(doc.at("k_max"), "k_max"));
        if (job.k_max < 2 || job.k_max > 8)
            field_error("k_max", "must be in [2, 8]");
    }
    if (doc.contains("p_range")) {
        const auto &r = doc.at("p_range");
        if (!r.is_array() || r.size() != 2)
            field_error("p_range", "expected [p_min, p_max]");
        const int lo = static_cast<int>(get_int(r[0], "p_range[0]"));
        const int hi = static_cast<int>(get_int(r[1], "p_range[1]"));
        if (lo < 0 || hi < lo)
            field_error("p_range", "expected 0 <= p_min <= p_max");
        job.p_range = std::make_pair(lo, hi);
    }

    if (job.kind == MapKind::monomial) {
        if (!doc.contains("matrix") || !doc.at("matrix").is_array() || doc.at("matrix").empty())
            field_error("matrix", "required for monomial jobs: a nonempty list of integer rows");
        const auto &m = doc.at("matrix");
        const std::size_t k = m.size();
        IntMatrix a(k, k);
        for (std::size_t i = 0; i < k; ++i) {
            const std::string rf = "matrix[" + std::to_string(i) + "]";
            if (!m[i].is_array() || m[i].size() != k)
                field_error(rf, "expected a row of " + std::to_string(k) + " integers (matrix must be square)");
            for (std::size_t j = 0; j < k; ++j)
                a(i, j) = get_bigint(m[i][j], rf + "[" + std::to_string(j) + "]");
        }
        job.matrix = std::move(a);
        if (doc.contains("components") || doc.contains("factors"))
            field_error(doc.contains("components") ? "components" : "factors",
                        "not allowed for monomial jobs");
        if (job.p_range && job.p_range->second > static_cast<int>(k))
            field_error("p_range", "p_max exceeds the dimension " + std::to_string(k));
        build_monomial(job);
    } else {
        if (!doc.contains("factors") || !doc.at("factors").is_array() || doc.at("factors").empty())
            field_error("factors", "required for rational jobs: list of factor dimensions");
        for (std::size_t i = 0; i < doc.at("factors").size(); ++i) {
            const long n = get_int(doc.at("factors")[i], "factors[" + std::to_string(i) + "]");
            if (n < 1)
                field_error("factors[" + std::to_string(i) + "]", "must be positive");
            job.factors.push_back(static_cast<int>(n));
        }
        if (doc.contains("matrix"))
            field_error("matrix", "not allowed for rational jobs");
        if (!doc.contains("components") || !doc.at("components").is_array())
            field_error("components", "required for rational jobs");
        const Space space(job.factors);
        const auto names = variable_names(space);
        const auto &comps = doc.at("components");
        if (comps.size() != job.factors.size())
            field_error("components", "expected " + std::to_string(job.factors.size()) +
                                          " component tuples, one per factor");
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const std::string cf = "components[" + std::to_string(i) + "]";
            if (!comps[i].is_array() ||
                static_cast<int>(comps[i].size()) != job.factors[i] + 1)
                field_error(cf, "expected " + std::to_string(job.factors[i] + 1) + " polynomials");
            std::vector<Polynomial> tuple;
            for (std::size_t t = 0; t < comps[i].size(); ++t)
                tuple.push_back(parse_poly_field(comps[i][t], names, cf + "[" + std::to_string(t) + "]"));
            job.components.push_back(std::move(tuple));
        }
        build_rational(job);
    }
    return job;
}

JobSpec parse_job_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidArgument(std::string("job document is not valid JSON: ") + e.what());
    }
    return parse_job(doc);
}

JobSpec default_suite_job() {
    JobSpec job;
    job.kind = MapKind::monomial;
    job.matrix = IntMatrix::identity(2);
    return job;
}

JobSpec parse_suite_job(const json &doc) {
    if (!doc.is_object())
        throw InvalidArgument("suite document must be a JSON object");
    static const std::set<std::string> allowed = {"type",      "n_max", "tolerance",
                                                  "oracle_tolerance", "seed", "count",
                                                  "k_max"};
    json copy = doc;
    for (const auto &[key, value] : doc.items())
        if (!allowed.count(key))
            field_error(key, "not a suite field");
    if (copy.contains("type") && copy.at("type") != "monomial")
        field_error("type", "the suite runs monomial maps only");
    copy["type"] = "monomial";
    copy["matrix"] = json::array({json::array({1})});
    JobSpec job = parse_job(copy);
    job.matrix = IntMatrix::identity(2);
    return job;
}

MonomialMap build_monomial(const JobSpec &job) {
    if (job.kind != MapKind::monomial)
        throw InvalidArgument("job is not a monomial job");
    return MonomialMap(job.matrix, job.fibration_dim);
}

RationalMap build_rational(const JobSpec &job) {
    if (job.kind != MapKind::rational)
        throw InvalidArgument("job is not a rational job");
    return RationalMap(Space(job.factors, job.fibration_dim), job.components);
}

namespace {

DegreeEntry entry_of(const DegreeEstimate &e) { return {e.chosen, Source::estimated, e.converged}; }

SequenceRecord record(Quantity label, int p, std::optional<int> q, std::vector<Integer> values,
                      double tol, bool truncated = false) {
    SequenceRecord r;
    r.label = label;
    r.p = p;
    r.q = q;
    r.truncated = truncated;
    r.values = std::move(values);
    DegreeSequence seq{label, p, q, std::nullopt, r.values, truncated};
    r.estimate = estimate(seq, tol);
    return r;
}

std::pair<int, int> p_window(const JobSpec &job, int k) {
    if (!job.p_range)
        return {0, k};
    return {job.p_range->first, std::min(job.p_range->second, k)};
}

struct MonomialRun {
    std::vector<SequenceRecord> sequences;
    DegreeProfile profile;
    std::optional<OracleRecord> oracle;
    DegreeProfile oracle_profile;
};

MonomialRun run_monomial(const JobSpec &job, bool with_extras) {
    const MonomialMap f = build_monomial(job);
    const int k = f.dim();
    const int n_max = job.n_max;
    MonomialRun run;
    run.profile.k = k;
    run.profile.degrees.assign(static_cast<std::size_t>(k) + 1, std::nullopt);
    auto [p_lo, p_hi] = p_window(job, k);
    for (int p = p_lo; p <= p_hi; ++p) {
        const auto classes = pullback_sequence(f, p, n_max);
        std::vector<Integer> lam;
        for (const auto &c : classes)
            lam.push_back(mass(c));
        run.sequences.push_back(record(Quantity::lambda, p, std::nullopt, lam, job.tolerance));
        run.profile.degrees[static_cast<std::size_t>(p)] = entry_of(run.sequences.back().estimate);
        if (with_extras && f.fibration_dim()) {
            std::vector<Integer> b;
            for (const auto &c : classes)
                b.push_back(b_from_class(c));
            run.sequences.push_back(record(Quantity::b, p, std::nullopt, b, job.tolerance));
            auto [q_lo, q_hi] = a_window(f, p);
            for (int q = q_lo; q <= q_hi; ++q) {
                std::vector<Integer> a;
                for (const auto &c : classes)
                    a.push_back(a_from_class(c, q));
                run.sequences.push_back(record(Quantity::a, p, q, a, job.tolerance));
            }
        }
    }

    const EigenDegrees eig = eigen_degrees(f.matrix());
    OracleRecord oracle;
    oracle.moduli = eig.moduli;
    oracle.degrees = eig.degrees;

    if (f.fibration_dim()) {
        const int l = *f.fibration_dim();
        run.profile.l = l;
        run.profile.relative.assign(static_cast<std::size_t>(k - l) + 1, std::nullopt);
        run.profile.base.assign(static_cast<std::size_t>(l) + 1, std::nullopt);
        for (int p = 0; p <= k - l; ++p) {
            run.sequences.push_back(record(Quantity::relative, p, std::nullopt,
                                           relative_sequence(f, p, n_max), job.tolerance));
            run.profile.relative[static_cast<std::size_t>(p)] = entry_of(run.sequences.back().estimate);
        }
        const IntMatrix g = f.base_block();
        for (int p = 0; p <= l; ++p) {
            run.sequences.push_back(record(Quantity::c, p, std::nullopt, c_sequence(g, p, n_max),
                                           job.tolerance));
            run.profile.base[static_cast<std::size_t>(p)] = entry_of(run.sequences.back().estimate);
        }
        oracle.base = eigen_degrees(g).degrees;
        oracle.relative = eigen_degrees(f.fiber_block()).degrees;
        run.oracle_profile = DegreeProfile::exact(oracle.degrees, oracle.relative, oracle.base, l);
    } else {
        run.oracle_profile = DegreeProfile::exact(oracle.degrees);
    }
    run.oracle = oracle;
    return run;
}

bool complete(const std::vector<std::optional<DegreeEntry>> &v) {
    return std::all_of(v.begin(), v.end(), [](const auto &e) { return e.has_value(); });
}

struct RationalRun {
    std::vector<SequenceRecord> sequences;
    DegreeProfile profile;
    IterateResult iterate;
    bool skew = false;
    std::vector<std::string> warnings;
};

RationalRun run_rational(const JobSpec &job) {
    const RationalMap f = build_rational(job);
    const Space &space = f.space();
    const int k = space.dim();
    RationalRun run;

    const DominanceCheck dom = check_dominance(f, job.seed);
    if (!dom.full_rank)
        run.warnings.push_back("dominance check failed: Jacobian rank below " + std::to_string(k) +
                               " at " + std::to_string(dom.points_tried) + " random points");

    run.iterate = iterate_multidegrees(f, job.n_max, job.degree_cap);
    const int reached = run.iterate.reached;
    if (run.iterate.truncated)
        run.warnings.push_back("sequence truncated: " + run.iterate.truncation_reason);
    if (reached < 2)
        throw ComputationError("only " + std::to_string(reached) +
                               " iterate(s) computed before the degree cap; need at least 2");

    run.profile.k = k;
    run.profile.degrees.assign(static_cast<std::size_t>(k) + 1, std::nullopt);
    const Integer lambda0 = mass(kaehler_power(space, 0));
    run.sequences.push_back(record(Quantity::lambda, 0, std::nullopt,
                                   std::vector<Integer>(static_cast<std::size_t>(reached) + 1, lambda0),
                                   job.tolerance, run.iterate.truncated));
    run.profile.degrees[0] = entry_of(run.sequences.back().estimate);
    run.sequences.push_back(record(Quantity::lambda, 1, std::nullopt, run.iterate.lambda1,
                                   job.tolerance, run.iterate.truncated));
    run.profile.degrees[1] = entry_of(run.sequences.back().estimate);

    if (space.fibered()) {
        run.skew = validate_skew(f);
        if (!run.skew) {
            run.warnings.push_back("declared fibration is not preserved: base components use fiber variables");
            return run;
        }
        const int dim_y = space.base_dim();
        run.profile.l = dim_y;
        run.profile.relative.assign(static_cast<std::size_t>(k - dim_y) + 1, std::nullopt);
        run.profile.base.assign(static_cast<std::size_t>(dim_y) + 1, std::nullopt);

        const Integer rel0 =
            pair(base_pullback_power(space, dim_y), kaehler_power(space, k - dim_y));
        run.sequences.push_back(record(Quantity::relative, 0, std::nullopt,
                                       std::vector<Integer>(static_cast<std::size_t>(reached) + 1, rel0),
                                       job.tolerance, run.iterate.truncated));
        run.profile.relative[0] = entry_of(run.sequences.back().estimate);
        run.sequences.push_back(record(Quantity::relative, 1, std::nullopt,
                                       fiber_degree_sequence(f, run.iterate), job.tolerance,
                                       run.iterate.truncated));
        run.profile.relative[1] = entry_of(run.sequences.back().estimate);

        const RationalMap g = f.base_map();
        const IterateResult git = iterate_multidegrees(g, reached, job.degree_cap);
        if (git.reached < 2)
            throw ComputationError("base map iterates exceed the degree cap");
        const Integer c0 = mass(kaehler_power(g.space(), 0));
        run.sequences.push_back(record(Quantity::c, 0, std::nullopt,
                                       std::vector<Integer>(static_cast<std::size_t>(git.reached) + 1, c0),
                                       job.tolerance, git.truncated));
        run.profile.base[0] = entry_of(run.sequences.back().estimate);
        run.sequences.push_back(record(Quantity::c, 1, std::nullopt, git.lambda1, job.tolerance,
                                       git.truncated));
        run.profile.base[1] = entry_of(run.sequences.back().estimate);
    }
    return run;
}

} // namespace

DegreesReport cmd_degrees(const JobSpec &job) {
    DegreesReport r;
    r.n_max = job.n_max;
    r.tolerance = job.tolerance;
    if (job.kind == MapKind::monomial) {
        MonomialRun run = run_monomial(job, false);
        r.kind = "monomial";
        r.k = run.profile.k;
        r.l = run.profile.l;
        r.sequences = std::move(run.sequences);
        r.profile = run.profile;
        r.oracle = run.oracle;
        if (complete(r.profile.degrees))
            r.concavity = log_concavity(r.profile, job.tolerance);
        r.oracle_concavity = log_concavity(run.oracle_profile, job.oracle_tolerance);
        if (r.l && complete(r.profile.degrees)) {
            r.distinctness = distinct_consecutive(r.profile, job.tolerance);
            r.product = product_formula(r.profile, job.tolerance);
        }
        return r;
    }
    RationalRun run = run_rational(job);
    r.kind = "rational";
    r.k = run.profile.k;
    r.l = run.profile.l;
    r.n_max = run.iterate.reached;
    r.sequences = std::move(run.sequences);
    r.profile = run.profile;
    r.multidegrees = run.iterate.degrees;
    r.truncated = run.iterate.truncated;
    r.truncation_reason = run.iterate.truncation_reason;
    r.warnings = run.warnings;
    if (r.l)
        r.product = product_formula(r.profile, job.tolerance);
    return r;
}

VerifyReport cmd_verify_product(const JobSpec &job) {
    if (!job.fibration_dim)
        throw FibrationError("verify-product needs fibration_dim: the map must preserve the projection "
                             "onto the first l factors (for monomial maps, A_ij = 0 whenever "
                             "i <= l < j)");
    VerifyReport r;
    r.n_max = job.n_max;
    r.tolerance = job.tolerance;
    if (job.kind == MapKind::monomial) {
        MonomialRun run = run_monomial(job, false);
        if (job.p_range && !complete(run.profile.degrees))
            throw InvalidArgument("verify-product needs every p; drop p_range");
        r.kind = "monomial";
        r.k = run.profile.k;
        r.l = *run.profile.l;
        r.estimate_level = product_formula(run.profile, job.tolerance);
        r.oracle_level = product_formula(run.oracle_profile, job.oracle_tolerance);
        r.lower_bound = lower_bound_check(run.profile, job.tolerance);
        r.verdict = combine(r.estimate_level.verdict, r.oracle_level->verdict);
        return r;
    }
    RationalRun run = run_rational(job);
    if (!run.skew)
        throw FibrationError("verify-product: the base components involve fiber variables, so the "
                             "map does not preserve the fibration");
    r.kind = "rational";
    r.k = run.profile.k;
    r.l = *run.profile.l;
    r.n_max = run.iterate.reached;
    r.estimate_level = product_formula(run.profile, job.tolerance);
    r.lower_bound = lower_bound_check(run.profile, job.tolerance);
    r.verdict = combine(r.estimate_level.verdict, r.lower_bound.verdict);
    r.warnings = run.warnings;
    return r;
}

SequenceReport cmd_sequence(const JobSpec &job) {
    SequenceReport r;
    if (job.kind == MapKind::monomial) {
        MonomialRun run = run_monomial(job, true);
        r.kind = "monomial";
        r.k = run.profile.k;
        r.n_max = job.n_max;
        r.sequences = std::move(run.sequences);
        return r;
    }
    RationalRun run = run_rational(job);
    r.kind = "rational";
    r.k = run.profile.k;
    r.n_max = run.iterate.reached;
    r.sequences = std::move(run.sequences);
    return r;
}

} // namespace dyndeg
