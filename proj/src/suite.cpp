// Randomized property suite over seeded block lower-triangular matrices.

#include "dyndeg/error.hpp"
#include "dyndeg/jobs.hpp"
#include "dyndeg/monomial.hpp"
#include "dyndeg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace dyndeg {

namespace {

class Tally {
  public:
    PropertyResult &operator[](const std::string &name) {
        auto it = index_.find(name);
        if (it == index_.end()) {
            it = index_.emplace(name, results_.size()).first;
            results_.push_back(PropertyResult{name, 0, 0, 0, {}});
        }
        return results_[it->second];
    }

    void record(const std::string &name, Verdict v, const std::string &context) {
        PropertyResult &r = (*this)[name];
        switch (v) {
        case Verdict::pass:
            ++r.passed;
            break;
        case Verdict::fail:
            ++r.failed;
            if (r.failures.size() < 10)
                r.failures.push_back(context);
            break;
        case Verdict::inconclusive:
            ++r.inconclusive;
            break;
        }
    }

    void check(const std::string &name, bool ok, const std::string &context) {
        record(name, ok ? Verdict::pass : Verdict::fail, context);
    }

    std::vector<PropertyResult> take() { return std::move(results_); }

  private:
    std::map<std::string, std::size_t> index_;
    std::vector<PropertyResult> results_;
};

std::string describe(const IntMatrix &a, int l) {
    std::ostringstream os;
    os << "A = [";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i ? ", " : "") << "[";
        for (std::size_t j = 0; j < a.cols(); ++j)
            os << (j ? "," : "") << a(i, j).get_str();
        os << "]";
    }
    os << "], l = " << l;
    return os.str();
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace

SuiteReport cmd_suite(const JobSpec &job) {
    SuiteReport report;
    report.seed = job.seed;
    report.count = job.count;
    report.k_max = job.k_max;
    report.n_max = job.n_max;
    report.tolerance = job.tolerance;

    FiberedSampler sampler(job.seed);
    Tally tally;
    const int n_exact = std::min(job.n_max, 20);

    for (int draw = 0; draw < job.count; ++draw) {
        const FiberedSample s = sampler.next(2, job.k_max);
        const MonomialMap f(s.a, s.l);
        const int k = f.dim();
        const int l = s.l;
        const std::string ctx = describe(s.a, l);

        // oracle level
        const EigenDegrees eig_f = eigen_degrees(s.a);
        const EigenDegrees eig_g = eigen_degrees(f.base_block());
        const EigenDegrees eig_c = eigen_degrees(f.fiber_block());
        const DegreeProfile oracle =
            DegreeProfile::exact(eig_f.degrees, eig_c.degrees, eig_g.degrees, l);
        tally.record("oracle_product_formula", product_formula(oracle, job.oracle_tolerance).verdict, ctx);
        tally.record("oracle_log_concavity", log_concavity(oracle, job.oracle_tolerance).verdict, ctx);
        const double det = std::abs(determinant(s.a).get_d());
        tally.check("oracle_top_degree", rel(eig_f.degrees.back(), det) < 1e-8, ctx);
        tally.record("distinct_degrees_oracle", distinct_consecutive(oracle, job.tolerance).implication, ctx);

        // engine level
        DegreeProfile est;
        est.k = k;
        est.l = l;
        const Integer kfact = factorial(static_cast<unsigned>(k));
        const Integer absdet = ::abs(determinant(s.a));
        for (int p = 0; p <= k; ++p) {
            const auto classes = pullback_sequence(f, p, job.n_max);
            std::vector<Integer> lam, b;
            for (const auto &c : classes) {
                lam.push_back(mass(c));
                b.push_back(b_from_class(c));
            }
            const DegreeSequence lam_seq{Quantity::lambda, p, {}, {}, lam, false};
            const DegreeEstimate e = estimate(lam_seq, job.tolerance);
            const bool settled = e.converged && stable_ratios(lam_seq, job.tolerance);
            est.degrees.push_back(DegreeEntry{e.chosen, Source::estimated, settled});

            if (!settled)
                tally.record("engine_vs_oracle", Verdict::inconclusive, ctx);
            else
                tally.check("engine_vs_oracle",
                            rel(e.ratio_estimate, eig_f.degrees[static_cast<std::size_t>(p)]) <
                                job.tolerance,
                            ctx + ", p = " + std::to_string(p));

            // b_p and lambda_p estimate the same limit
            const DegreeSequence b_seq{Quantity::b, p, {}, l, b, false};
            const DegreeEstimate eb = estimate(b_seq, job.tolerance);
            if (!settled || !eb.converged || !stable_ratios(b_seq, job.tolerance))
                tally.record("b_p_convergence", Verdict::inconclusive, ctx);
            else
                tally.check("b_p_convergence", rel(eb.chosen, e.chosen) < job.tolerance,
                            ctx + ", p = " + std::to_string(p));

            bool endpoints = true;
            for (int m = 0; m <= n_exact; ++m) {
                if (p == 0)
                    endpoints = endpoints && lam[static_cast<std::size_t>(m)] == kfact;
                if (p == k)
                    endpoints = endpoints &&
                                lam[static_cast<std::size_t>(m)] ==
                                    kfact * ipow(absdet, static_cast<unsigned>(m));
            }
            if (p == 0 || p == k)
                tally.check("endpoint_degrees", endpoints, ctx + ", p = " + std::to_string(p));

            auto [alo, ahi] = alpha_range(f.space(), p);
            bool monotone = true;
            for (int m = 0; m <= n_exact && monotone; ++m)
                for (int j = alo; j < ahi; ++j)
                    monotone = monotone && alpha(classes[static_cast<std::size_t>(m)], j) <=
                                               alpha(classes[static_cast<std::size_t>(m)], j + 1);
            tally.check("alpha_monotonicity", monotone, ctx + ", p = " + std::to_string(p));

            if (p <= k - l) {
                bool identity = true;
                for (int m = 0; m <= n_exact; ++m)
                    identity = identity && a_from_class(classes[static_cast<std::size_t>(m)], p) ==
                                               relative_from_class(classes[static_cast<std::size_t>(m)]);
                tally.check("a_pp_equals_relative", identity, ctx + ", p = " + std::to_string(p));
                const DegreeSequence rs{Quantity::relative, p, {}, l, relative_sequence(f, p, job.n_max), false};
                const DegreeEstimate er = estimate(rs, job.tolerance);
                est.relative.push_back(DegreeEntry{er.chosen, Source::estimated,
                                                   er.converged && stable_ratios(rs, job.tolerance)});
            }
            if (p <= l) {
                const DegreeSequence cs{Quantity::c, p, {}, {}, c_sequence(f.base_block(), p, job.n_max), false};
                const DegreeEstimate ec = estimate(cs, job.tolerance);
                est.base.push_back(DegreeEntry{ec.chosen, Source::estimated,
                                               ec.converged && stable_ratios(cs, job.tolerance)});
            }
        }
        tally.record("engine_product_formula", product_formula(est, job.tolerance).verdict, ctx);
        tally.record("engine_log_concavity", log_concavity(est, job.tolerance).verdict, ctx);
        tally.record("distinct_degrees_engine", distinct_consecutive(est, job.tolerance).implication, ctx);

        // exact infrastructure identities on an unrelated pair
        const int kk = static_cast<int>(s.a.rows());
        const IntMatrix a = sampler.next_matrix(kk);
        const IntMatrix b = sampler.next_matrix(kk);
        bool cb = true;
        for (int p = 0; p <= kk; ++p)
            cb = cb && compound(a * b, p).matrix == compound(a, p).matrix * compound(b, p).matrix;
        tally.check("cauchy_binet", cb, describe(a, 0));
        bool cm = true;
        for (int p = 0; p <= kk; ++p)
            cm = cm && compound_vs_minors(a, p, 3);
        tally.check("compound_vs_minors", cm, describe(a, 0));

        const Space space = Space::lines(kk);
        bool ring = true;
        for (int p = 0; p <= kk; ++p)
            ring = ring && kaehler_power(space, p) ==
                               ring_expand_oracle(space, std::vector<GeneratorSum>(
                                                             static_cast<std::size_t>(p), omega_terms(space)));
        tally.check("ring_vs_expansion", ring, "k = " + std::to_string(kk));
    }

    report.properties = tally.take();
    report.skipped_draws = sampler.skipped();
    report.log = sampler.log();
    report.ok = std::all_of(report.properties.begin(), report.properties.end(),
                            [](const PropertyResult &p) { return p.failed == 0; });
    return report;
}

} // namespace dyndeg
