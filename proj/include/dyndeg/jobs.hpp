#pragma once

// Job descriptions, report structures and the command implementations behind
// the dyndeg CLI and the Python module. Reports serialize to JSON with sorted
// keys and no volatile fields, so equal jobs give byte-identical output.

#include "dyndeg/degrees.hpp"
#include "dyndeg/matrix.hpp"
#include "dyndeg/monomial.hpp"
#include "dyndeg/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dyndeg {

enum class MapKind { monomial, rational };

struct JobSpec {
    MapKind kind = MapKind::monomial;
    IntMatrix matrix;                                   // monomial
    std::vector<int> factors;                           // rational
    std::vector<std::vector<Polynomial>> components;    // rational
    std::optional<int> fibration_dim;
    int n_max = 40;
    std::optional<std::pair<int, int>> p_range;
    double tolerance = kEstimateTolerance;
    double oracle_tolerance = kOracleTolerance;
    int degree_cap = kDefaultDegreeCap;
    std::uint64_t seed = 20240601;
    int count = 100; // suite: random matrices
    int k_max = 5;   // suite: largest dimension
};

/// Parses a job document. Errors name the offending field.
JobSpec parse_job(const nlohmann::json &doc);
JobSpec parse_job_text(const std::string &text);

/// Suite documents carry only seed, count, k_max, n_max and tolerances.
JobSpec parse_suite_job(const nlohmann::json &doc);

/// Defaults for the suite when no input document is given.
JobSpec default_suite_job();

RationalMap build_rational(const JobSpec &job);
MonomialMap build_monomial(const JobSpec &job);

struct SequenceRecord {
    Quantity label = Quantity::lambda;
    int p = 0;
    std::optional<int> q;
    std::vector<Integer> values;
    bool truncated = false;
    DegreeEstimate estimate;
    bool operator==(const SequenceRecord &) const = default;
};

struct OracleRecord {
    std::vector<double> moduli;
    std::vector<double> degrees;
    std::vector<double> relative;
    std::vector<double> base;
    bool operator==(const OracleRecord &) const = default;
};

struct DegreesReport {
    std::string kind;
    int k = 0;
    std::optional<int> l;
    int n_max = 0;
    double tolerance = 0.0;
    std::vector<SequenceRecord> sequences;
    DegreeProfile profile;
    std::optional<OracleRecord> oracle;
    std::optional<ConcavityReport> concavity;
    std::optional<ConcavityReport> oracle_concavity;
    std::optional<DistinctnessReport> distinctness;
    std::optional<ProductReport> product;
    std::vector<DegreeMatrix> multidegrees;
    bool truncated = false;
    std::string truncation_reason;
    std::vector<std::string> warnings;
    bool operator==(const DegreesReport &) const = default;
};

struct VerifyReport {
    std::string kind;
    int k = 0;
    int l = 0;
    int n_max = 0;
    double tolerance = 0.0;
    ProductReport estimate_level;
    std::optional<ProductReport> oracle_level;
    ProductReport lower_bound;
    Verdict verdict = Verdict::pass;
    std::vector<std::string> warnings;
    bool operator==(const VerifyReport &) const = default;
};

struct SequenceReport {
    std::string kind;
    int k = 0;
    int n_max = 0;
    std::vector<SequenceRecord> sequences;
    bool operator==(const SequenceReport &) const = default;
};

struct PropertyResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    int inconclusive = 0;
    std::vector<std::string> failures;
    bool operator==(const PropertyResult &) const = default;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    int count = 0;
    int k_max = 0;
    int n_max = 0;
    double tolerance = 0.0;
    std::vector<PropertyResult> properties;
    int skipped_draws = 0;
    std::vector<std::string> log;
    bool ok = true;
    bool operator==(const SuiteReport &) const = default;
};

DegreesReport cmd_degrees(const JobSpec &job);
/// Throws FibrationError for maps without a valid fibration.
VerifyReport cmd_verify_product(const JobSpec &job);
SequenceReport cmd_sequence(const JobSpec &job);
SuiteReport cmd_suite(const JobSpec &job);

std::string render_table(const DegreesReport &r);
std::string render_table(const VerifyReport &r);
std::string render_table(const SequenceReport &r);
std::string render_table(const SuiteReport &r);

/// Columns p, n, lambda_p, root_est, ratio_est (estimates at each prefix n >= 2).
std::string to_csv(const SequenceReport &r);
std::string to_csv(const DegreesReport &r);
std::string to_csv(const VerifyReport &r);
std::string to_csv(const SuiteReport &r);

// JSON round trip (nlohmann ADL hooks).
void to_json(nlohmann::json &j, const DegreeEstimate &e);
void from_json(const nlohmann::json &j, DegreeEstimate &e);
void to_json(nlohmann::json &j, const DegreeProfile &p);
void from_json(const nlohmann::json &j, DegreeProfile &p);
void to_json(nlohmann::json &j, const ConcavityReport &r);
void from_json(const nlohmann::json &j, ConcavityReport &r);
void to_json(nlohmann::json &j, const DistinctnessReport &r);
void from_json(const nlohmann::json &j, DistinctnessReport &r);
void to_json(nlohmann::json &j, const ProductRow &r);
void from_json(const nlohmann::json &j, ProductRow &r);
void to_json(nlohmann::json &j, const ProductReport &r);
void from_json(const nlohmann::json &j, ProductReport &r);
void to_json(nlohmann::json &j, const SequenceRecord &r);
void from_json(const nlohmann::json &j, SequenceRecord &r);
void to_json(nlohmann::json &j, const OracleRecord &r);
void from_json(const nlohmann::json &j, OracleRecord &r);
void to_json(nlohmann::json &j, const DegreesReport &r);
void from_json(const nlohmann::json &j, DegreesReport &r);
void to_json(nlohmann::json &j, const VerifyReport &r);
void from_json(const nlohmann::json &j, VerifyReport &r);
void to_json(nlohmann::json &j, const SequenceReport &r);
void from_json(const nlohmann::json &j, SequenceReport &r);
void to_json(nlohmann::json &j, const PropertyResult &r);
void from_json(const nlohmann::json &j, PropertyResult &r);
void to_json(nlohmann::json &j, const SuiteReport &r);
void from_json(const nlohmann::json &j, SuiteReport &r);

/// Pretty-printed JSON with a trailing newline.
template <typename Report> std::string to_json_text(const Report &r) {
    return nlohmann::json(r).dump(2) + "\n";
}

} // namespace dyndeg
