#include "dyndeg/degrees.hpp"

#include "dyndeg/error.hpp"

#include <algorithm>
#include <cmath>

namespace dyndeg {

namespace {

// Relative tolerance under which two products in the max are reported as tied.
constexpr double kTieTolerance = 1e-9;

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

const DegreeEntry &need(const std::vector<std::optional<DegreeEntry>> &v, int i,
                        const char *what) {
    if (i < 0 || i >= static_cast<int>(v.size()) || !v[static_cast<std::size_t>(i)])
        throw InvalidArgument(std::string("incomplete profile: missing ") + what + " degree " +
                              std::to_string(i));
    return *v[static_cast<std::size_t>(i)];
}

bool unsettled(const DegreeEntry &e) { return e.source == Source::estimated && !e.converged; }

std::vector<std::optional<DegreeEntry>> exact_entries(const std::vector<double> &v) {
    std::vector<std::optional<DegreeEntry>> out;
    for (double x : v)
        out.push_back(DegreeEntry{x, Source::oracle_exact, true});
    return out;
}

bool all_distinct(const std::vector<std::optional<DegreeEntry>> &v, double tol, bool &unsure,
                  const char *what) {
    bool distinct = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const DegreeEntry &e = need(v, static_cast<int>(i), what);
        unsure = unsure || unsettled(e);
        if (i > 0 && rel_diff(e.value, v[i - 1]->value) <= tol)
            distinct = false;
    }
    return distinct;
}

ProductReport product_rows(const DegreeProfile &profile, double tol, bool one_sided) {
    if (!profile.l)
        throw FibrationError("product formula: profile has no fibration");
    const int k = profile.k;
    const int l = *profile.l;
    ProductReport report;
    bool any_fail = false;
    bool any_unsure = false;
    for (int p = 0; p <= k; ++p) {
        if (p >= static_cast<int>(profile.degrees.size()) ||
            !profile.degrees[static_cast<std::size_t>(p)])
            continue;
        const DegreeEntry &lhs = *profile.degrees[static_cast<std::size_t>(p)];
        ProductRow row;
        row.p = p;
        row.lhs = lhs.value;
        bool unsure = unsettled(lhs);
        const int lo = std::max(0, p - (k - l));
        const int hi = std::min(p, l);
        std::vector<double> products;
        for (int j = lo; j <= hi; ++j) {
            const DegreeEntry &g = need(profile.base, j, "base");
            const DegreeEntry &r = need(profile.relative, p - j, "relative");
            unsure = unsure || unsettled(g) || unsettled(r);
            products.push_back(g.value * r.value);
        }
        row.rhs = *std::max_element(products.begin(), products.end());
        for (int j = lo; j <= hi; ++j)
            if (rel_diff(products[static_cast<std::size_t>(j - lo)], row.rhs) <= kTieTolerance)
                row.argmax.push_back(j);
        row.rel_error = row.rhs == 0.0 ? std::abs(row.lhs) : std::abs(row.lhs - row.rhs) / row.rhs;
        const bool ok = one_sided ? row.lhs >= row.rhs * (1.0 - tol) : row.rel_error <= tol;
        if (unsure)
            row.verdict = Verdict::inconclusive;
        else
            row.verdict = ok ? Verdict::pass : Verdict::fail;
        any_fail = any_fail || row.verdict == Verdict::fail;
        any_unsure = any_unsure || row.verdict == Verdict::inconclusive;
        report.rows.push_back(std::move(row));
    }
    if (report.rows.empty())
        throw InvalidArgument("incomplete profile: no degree d_p(f) present");
    report.verdict = any_fail ? Verdict::fail : any_unsure ? Verdict::inconclusive : Verdict::pass;
    return report;
}

} // namespace

std::string to_string(Quantity q) {
    switch (q) {
    case Quantity::lambda:
        return "lambda";
    case Quantity::relative:
        return "lambda_relative";
    case Quantity::a:
        return "a";
    case Quantity::b:
        return "b";
    case Quantity::c:
        return "c";
    }
    return "?";
}

Quantity quantity_from_string(const std::string &s) {
    for (Quantity q : {Quantity::lambda, Quantity::relative, Quantity::a, Quantity::b, Quantity::c})
        if (to_string(q) == s)
            return q;
    throw InvalidArgument("unknown quantity '" + s + "'");
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass:
        return "PASS";
    case Verdict::fail:
        return "FAIL";
    case Verdict::inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

Verdict verdict_from_string(const std::string &s) {
    for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::inconclusive})
        if (to_string(v) == s)
            return v;
    throw InvalidArgument("unknown verdict '" + s + "'");
}

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::fail || b == Verdict::fail)
        return Verdict::fail;
    if (a == Verdict::inconclusive || b == Verdict::inconclusive)
        return Verdict::inconclusive;
    return Verdict::pass;
}

DegreeEstimate estimate(const DegreeSequence &seq, double tol) {
    const auto &v = seq.values;
    if (v.size() < 3)
        throw InvalidArgument("estimate: need values for n = 0..N with N >= 2");
    for (const auto &x : v)
        if (x <= 0)
            throw InvalidArgument("estimate: sequence values must be positive");
    const std::size_t n = v.size() - 1;
    std::vector<double> logs;
    for (const auto &x : v)
        logs.push_back(log_of(x));

    DegreeEstimate e;
    e.root_estimate = std::exp(logs[n] / static_cast<double>(n));
    e.ratio_estimate = std::exp(logs[n] - logs[n - 1]);
    if (n >= 4) {
        const double r0 = std::exp(logs[n] - logs[n - 1]);
        const double r1 = std::exp(logs[n - 1] - logs[n - 2]);
        const double r2 = std::exp(logs[n - 2] - logs[n - 3]);
        e.converged = rel_diff(r0, r1) < tol && rel_diff(r0, r2) < tol && rel_diff(r1, r2) < tol;
    }
    e.chosen = e.converged ? e.ratio_estimate : e.root_estimate;
    return e;
}

bool stable_ratios(const DegreeSequence &seq, double tol) {
    const auto &v = seq.values;
    const int n = static_cast<int>(v.size()) - 1;
    const int window = std::max(3, n / 4);
    if (n < 2 || n - window + 1 < 2)
        return false;
    double lo = HUGE_VAL, hi = 0.0;
    for (int m = n - window + 1; m <= n; ++m) {
        const double r = std::exp(log_of(v[static_cast<std::size_t>(m)]) -
                                  log_of(v[static_cast<std::size_t>(m - 1)]));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return (hi - lo) / hi < tol;
}

DegreeProfile DegreeProfile::exact(const std::vector<double> &degrees,
                                   const std::vector<double> &relative,
                                   const std::vector<double> &base, std::optional<int> l) {
    DegreeProfile p;
    p.k = static_cast<int>(degrees.size()) - 1;
    p.l = l;
    p.degrees = exact_entries(degrees);
    p.relative = exact_entries(relative);
    p.base = exact_entries(base);
    return p;
}

ConcavityReport log_concavity(const DegreeProfile &profile, double tol) {
    if (static_cast<int>(profile.degrees.size()) != profile.k + 1)
        throw InvalidArgument("incomplete profile: need d_0..d_k");
    ConcavityReport report;
    bool unsure = false;
    for (int p = 1; p < profile.k; ++p) {
        const DegreeEntry &lo = need(profile.degrees, p - 1, "f");
        const DegreeEntry &mid = need(profile.degrees, p, "f");
        const DegreeEntry &hi = need(profile.degrees, p + 1, "f");
        const bool settled = !unsettled(lo) && !unsettled(mid) && !unsettled(hi);
        unsure = unsure || !settled;
        if (mid.value * mid.value < lo.value * hi.value * (1.0 - tol)) {
            // a violation among unconverged estimates proves nothing
            if (settled) {
                report.verdict = Verdict::fail;
                report.failing_p = p;
                return report;
            }
        }
    }
    for (int p = 0; p <= profile.k; ++p)
        need(profile.degrees, p, "f");
    report.verdict = unsure ? Verdict::inconclusive : Verdict::pass;
    return report;
}

DistinctnessReport distinct_consecutive(const DegreeProfile &profile, double tol) {
    if (!profile.l)
        throw FibrationError("distinct_consecutive: profile has no fibration");
    if (static_cast<int>(profile.degrees.size()) != profile.k + 1 ||
        static_cast<int>(profile.base.size()) != *profile.l + 1 ||
        static_cast<int>(profile.relative.size()) != profile.k - *profile.l + 1)
        throw InvalidArgument("incomplete profile: distinctness needs full f, g and relative degrees");
    DistinctnessReport r;
    bool unsure = false;
    r.f_distinct = all_distinct(profile.degrees, tol, unsure, "f");
    r.g_distinct = all_distinct(profile.base, tol, unsure, "base");
    r.relative_distinct = all_distinct(profile.relative, tol, unsure, "relative");
    const bool holds = !r.f_distinct || (r.g_distinct && r.relative_distinct);
    if (unsure)
        r.implication = Verdict::inconclusive;
    else
        r.implication = holds ? Verdict::pass : Verdict::fail;
    return r;
}

ProductReport product_formula(const DegreeProfile &profile, double tol) {
    return product_rows(profile, tol, false);
}

ProductReport lower_bound_check(const DegreeProfile &profile, double tol) {
    return product_rows(profile, tol, true);
}

} // namespace dyndeg
