#pragma once

// From exact sequences to degree estimates and verdicts on the degree
// profile: log-concavity, distinct consecutive degrees, the product formula
// for semi-conjugate maps and its one-sided lower bound.

#include "dyndeg/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dyndeg {

constexpr double kEstimateTolerance = 5e-2;
constexpr double kOracleTolerance = 1e-9;

enum class Quantity { lambda, relative, a, b, c };

std::string to_string(Quantity q);
Quantity quantity_from_string(const std::string &s);

struct DegreeSequence {
    Quantity label = Quantity::lambda;
    int p = 0;
    std::optional<int> q;
    std::optional<int> l;
    /// Exact values for n = 0..N.
    std::vector<Integer> values;
    bool truncated = false;
};

struct DegreeEstimate {
    double root_estimate = 0.0;  // value(N)^(1/N)
    double ratio_estimate = 0.0; // value(N) / value(N-1)
    bool converged = false;
    /// The ratio estimate when converged, otherwise the root estimate.
    double chosen = 0.0;
    bool operator==(const DegreeEstimate &) const = default;
};

/// Requires N >= 2 and positive values. `converged` holds iff the last three
/// ratio estimates (n >= 2, the n = 0 term is ignored) pairwise agree within
/// `tol` relatively.
DegreeEstimate estimate(const DegreeSequence &seq, double tol = kEstimateTolerance);

/// Stricter than `converged`: the last max(3, N/4) ratio estimates all agree
/// within `tol`. Slowly rotating complex eigenvalues can make three consecutive
/// ratios agree by accident; a longer window rejects most such cases.
bool stable_ratios(const DegreeSequence &seq, double tol = kEstimateTolerance);

enum class Source { estimated, oracle_exact };

struct DegreeEntry {
    double value = 0.0;
    Source source = Source::estimated;
    bool converged = true;
    bool operator==(const DegreeEntry &) const = default;
};

/// Degrees d_0..d_k of f, d_0..d_{k-l}(f|pi), d_0..d_l(g). Missing entries
/// are nullopt (e.g. higher p for polynomial maps). l here is dim Y.
struct DegreeProfile {
    int k = 0;
    std::optional<int> l;
    std::vector<std::optional<DegreeEntry>> degrees;
    std::vector<std::optional<DegreeEntry>> relative;
    std::vector<std::optional<DegreeEntry>> base;

    static DegreeProfile exact(const std::vector<double> &degrees,
                               const std::vector<double> &relative = {},
                               const std::vector<double> &base = {},
                               std::optional<int> l = std::nullopt);
    bool operator==(const DegreeProfile &) const = default;
};

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string &s);

struct ConcavityReport {
    Verdict verdict = Verdict::pass;
    std::optional<int> failing_p;
    bool operator==(const ConcavityReport &) const = default;
};

/// d_p^2 >= d_{p-1} d_{p+1} (1 - tol) for 1 <= p <= k-1.
ConcavityReport log_concavity(const DegreeProfile &profile, double tol);

struct DistinctnessReport {
    bool f_distinct = false;
    bool g_distinct = false;
    bool relative_distinct = false;
    /// f distinct implies g distinct and relative distinct.
    Verdict implication = Verdict::pass;
    bool operator==(const DistinctnessReport &) const = default;
};

DistinctnessReport distinct_consecutive(const DegreeProfile &profile, double tol);

struct ProductRow {
    int p = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    std::vector<int> argmax;
    double rel_error = 0.0;
    Verdict verdict = Verdict::pass;
    bool operator==(const ProductRow &) const = default;
};

struct ProductReport {
    std::vector<ProductRow> rows;
    Verdict verdict = Verdict::pass;
    bool operator==(const ProductReport &) const = default;
};

/// d_p(f) = max_j d_j(g) d_{p-j}(f|pi) over max(0, p-k+l) <= j <= min(p, l),
/// checked for every p whose left side is present. Ties in the maximum are
/// all reported.
ProductReport product_formula(const DegreeProfile &profile, double tol);

/// The one-sided form d_p(f) >= max_j d_j(g) d_{p-j}(f|pi) (1 - tol).
ProductReport lower_bound_check(const DegreeProfile &profile, double tol);

/// Combines verdicts: any fail -> fail, else any inconclusive -> inconclusive.
Verdict combine(Verdict a, Verdict b);

} // namespace dyndeg
