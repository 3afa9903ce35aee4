#include "dyndeg/jobs.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace dyndeg {

using nlohmann::json;

namespace {

template <typename T> void put_opt(json &j, const char *key, const std::optional<T> &v) {
    j[key] = v ? json(*v) : json(nullptr);
}

template <typename T> void get_opt(const json &j, const char *key, std::optional<T> &v) {
    if (!j.contains(key) || j.at(key).is_null())
        v.reset();
    else
        v = j.at(key).get<T>();
}

json entries_to_json(const std::vector<std::optional<DegreeEntry>> &v) {
    json arr = json::array();
    for (const auto &e : v) {
        if (!e) {
            arr.push_back(nullptr);
            continue;
        }
        arr.push_back({{"value", e->value},
                       {"source", e->source == Source::estimated ? "estimated" : "oracle-exact"},
                       {"converged", e->converged}});
    }
    return arr;
}

std::vector<std::optional<DegreeEntry>> entries_from_json(const json &arr) {
    std::vector<std::optional<DegreeEntry>> v;
    for (const auto &e : arr) {
        if (e.is_null()) {
            v.emplace_back();
            continue;
        }
        DegreeEntry d;
        d.value = e.at("value").get<double>();
        d.source = e.at("source").get<std::string>() == "estimated" ? Source::estimated
                                                                    : Source::oracle_exact;
        d.converged = e.at("converged").get<bool>();
        v.emplace_back(d);
    }
    return v;
}

std::string fmt(double x, int prec = 6) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(prec) << x;
    return os.str();
}

std::string short_int(const Integer &x) {
    std::string s = x.get_str();
    if (s.size() <= 14)
        return s;
    std::ostringstream os;
    os << s.substr(0, 1) << "." << s.substr(1, 5) << "e" << (s.size() - 1);
    return os.str();
}

std::string argmax_text(const std::vector<int> &v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

const SequenceRecord *find_seq(const std::vector<SequenceRecord> &seqs, Quantity q, int p) {
    for (const auto &s : seqs)
        if (s.label == q && s.p == p && !s.q)
            return &s;
    return nullptr;
}

void product_table(std::ostringstream &os, const ProductReport &r, const std::string &title) {
    os << title << ": " << to_string(r.verdict) << "\n";
    os << "  " << std::left << std::setw(4) << "p" << std::setw(16) << "LHS d_p(f)" << std::setw(16)
       << "RHS max_j" << std::setw(12) << "argmax j" << std::setw(14) << "rel.error"
       << "verdict\n";
    for (const auto &row : r.rows)
        os << "  " << std::left << std::setw(4) << row.p << std::setw(16) << fmt(row.lhs)
           << std::setw(16) << fmt(row.rhs) << std::setw(12) << argmax_text(row.argmax)
           << std::setw(14) << std::scientific << std::setprecision(2) << row.rel_error
           << std::defaultfloat << to_string(row.verdict) << "\n";
}

std::string profile_row(const std::vector<std::optional<DegreeEntry>> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + (v[i] ? fmt(v[i]->value, 4) : std::string("-"));
    return "(" + s + ")";
}

} // namespace

void to_json(json &j, const DegreeEstimate &e) {
    j = {{"root_estimate", e.root_estimate},
         {"ratio_estimate", e.ratio_estimate},
         {"converged", e.converged},
         {"chosen", e.chosen}};
}

void from_json(const json &j, DegreeEstimate &e) {
    e.root_estimate = j.at("root_estimate").get<double>();
    e.ratio_estimate = j.at("ratio_estimate").get<double>();
    e.converged = j.at("converged").get<bool>();
    e.chosen = j.at("chosen").get<double>();
}

void to_json(json &j, const DegreeProfile &p) {
    j = {{"k", p.k},
         {"degrees", entries_to_json(p.degrees)},
         {"relative", entries_to_json(p.relative)},
         {"base", entries_to_json(p.base)}};
    put_opt(j, "l", p.l);
}

void from_json(const json &j, DegreeProfile &p) {
    p.k = j.at("k").get<int>();
    get_opt(j, "l", p.l);
    p.degrees = entries_from_json(j.at("degrees"));
    p.relative = entries_from_json(j.at("relative"));
    p.base = entries_from_json(j.at("base"));
}

void to_json(json &j, const ConcavityReport &r) {
    j = {{"verdict", to_string(r.verdict)}};
    put_opt(j, "failing_p", r.failing_p);
}

void from_json(const json &j, ConcavityReport &r) {
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    get_opt(j, "failing_p", r.failing_p);
}

void to_json(json &j, const DistinctnessReport &r) {
    j = {{"f_distinct", r.f_distinct},
         {"g_distinct", r.g_distinct},
         {"relative_distinct", r.relative_distinct},
         {"implication", to_string(r.implication)}};
}

void from_json(const json &j, DistinctnessReport &r) {
    r.f_distinct = j.at("f_distinct").get<bool>();
    r.g_distinct = j.at("g_distinct").get<bool>();
    r.relative_distinct = j.at("relative_distinct").get<bool>();
    r.implication = verdict_from_string(j.at("implication").get<std::string>());
}

void to_json(json &j, const ProductRow &r) {
    j = {{"p", r.p},           {"lhs", r.lhs},
         {"rhs", r.rhs},       {"argmax", r.argmax},
         {"rel_error", r.rel_error}, {"verdict", to_string(r.verdict)}};
}

void from_json(const json &j, ProductRow &r) {
    r.p = j.at("p").get<int>();
    r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").get<double>();
    r.argmax = j.at("argmax").get<std::vector<int>>();
    r.rel_error = j.at("rel_error").get<double>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
}

void to_json(json &j, const ProductReport &r) {
    j = {{"rows", r.rows}, {"verdict", to_string(r.verdict)}};
}

void from_json(const json &j, ProductReport &r) {
    r.rows = j.at("rows").get<std::vector<ProductRow>>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
}

void to_json(json &j, const SequenceRecord &r) {
    json values = json::array();
    for (const auto &v : r.values)
        values.push_back(v.get_str());
    j = {{"label", to_string(r.label)}, {"p", r.p},
         {"values", values},            {"truncated", r.truncated},
         {"estimate", r.estimate}};
    put_opt(j, "q", r.q);
}

void from_json(const json &j, SequenceRecord &r) {
    r.label = quantity_from_string(j.at("label").get<std::string>());
    r.p = j.at("p").get<int>();
    get_opt(j, "q", r.q);
    r.values.clear();
    for (const auto &v : j.at("values"))
        r.values.emplace_back(v.get<std::string>());
    r.truncated = j.at("truncated").get<bool>();
    r.estimate = j.at("estimate").get<DegreeEstimate>();
}

void to_json(json &j, const OracleRecord &r) {
    j = {{"moduli", r.moduli}, {"degrees", r.degrees}, {"relative", r.relative}, {"base", r.base}};
}

void from_json(const json &j, OracleRecord &r) {
    r.moduli = j.at("moduli").get<std::vector<double>>();
    r.degrees = j.at("degrees").get<std::vector<double>>();
    r.relative = j.at("relative").get<std::vector<double>>();
    r.base = j.at("base").get<std::vector<double>>();
}

void to_json(json &j, const DegreesReport &r) {
    j = {{"report", "degrees"},
         {"kind", r.kind},
         {"k", r.k},
         {"n_max", r.n_max},
         {"tolerance", r.tolerance},
         {"sequences", r.sequences},
         {"profile", r.profile},
         {"multidegrees", r.multidegrees},
         {"truncated", r.truncated},
         {"truncation_reason", r.truncation_reason},
         {"warnings", r.warnings}};
    put_opt(j, "l", r.l);
    put_opt(j, "oracle", r.oracle);
    put_opt(j, "concavity", r.concavity);
    put_opt(j, "oracle_concavity", r.oracle_concavity);
    put_opt(j, "distinctness", r.distinctness);
    put_opt(j, "product", r.product);
}

void from_json(const json &j, DegreesReport &r) {
    r.kind = j.at("kind").get<std::string>();
    r.k = j.at("k").get<int>();
    get_opt(j, "l", r.l);
    r.n_max = j.at("n_max").get<int>();
    r.tolerance = j.at("tolerance").get<double>();
    r.sequences = j.at("sequences").get<std::vector<SequenceRecord>>();
    r.profile = j.at("profile").get<DegreeProfile>();
    get_opt(j, "oracle", r.oracle);
    get_opt(j, "concavity", r.concavity);
    get_opt(j, "oracle_concavity", r.oracle_concavity);
    get_opt(j, "distinctness", r.distinctness);
    get_opt(j, "product", r.product);
    r.multidegrees = j.at("multidegrees").get<std::vector<DegreeMatrix>>();
    r.truncated = j.at("truncated").get<bool>();
    r.truncation_reason = j.at("truncation_reason").get<std::string>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
}

void to_json(json &j, const VerifyReport &r) {
    j = {{"report", "verify-product"},
         {"kind", r.kind},
         {"k", r.k},
         {"l", r.l},
         {"n_max", r.n_max},
         {"tolerance", r.tolerance},
         {"estimate_level", r.estimate_level},
         {"lower_bound", r.lower_bound},
         {"verdict", to_string(r.verdict)},
         {"warnings", r.warnings}};
    put_opt(j, "oracle_level", r.oracle_level);
}

void from_json(const json &j, VerifyReport &r) {
    r.kind = j.at("kind").get<std::string>();
    r.k = j.at("k").get<int>();
    r.l = j.at("l").get<int>();
    r.n_max = j.at("n_max").get<int>();
    r.tolerance = j.at("tolerance").get<double>();
    r.estimate_level = j.at("estimate_level").get<ProductReport>();
    get_opt(j, "oracle_level", r.oracle_level);
    r.lower_bound = j.at("lower_bound").get<ProductReport>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
}

void to_json(json &j, const SequenceReport &r) {
    j = {{"report", "sequence"}, {"kind", r.kind}, {"k", r.k}, {"n_max", r.n_max},
         {"sequences", r.sequences}};
}

void from_json(const json &j, SequenceReport &r) {
    r.kind = j.at("kind").get<std::string>();
    r.k = j.at("k").get<int>();
    r.n_max = j.at("n_max").get<int>();
    r.sequences = j.at("sequences").get<std::vector<SequenceRecord>>();
}

void to_json(json &j, const PropertyResult &r) {
    j = {{"name", r.name},
         {"passed", r.passed},
         {"failed", r.failed},
         {"inconclusive", r.inconclusive},
         {"failures", r.failures}};
}

void from_json(const json &j, PropertyResult &r) {
    r.name = j.at("name").get<std::string>();
    r.passed = j.at("passed").get<int>();
    r.failed = j.at("failed").get<int>();
    r.inconclusive = j.at("inconclusive").get<int>();
    r.failures = j.at("failures").get<std::vector<std::string>>();
}

void to_json(json &j, const SuiteReport &r) {
    j = {{"report", "suite"},
         {"seed", r.seed},
         {"count", r.count},
         {"k_max", r.k_max},
         {"n_max", r.n_max},
         {"tolerance", r.tolerance},
         {"properties", r.properties},
         {"skipped_draws", r.skipped_draws},
         {"log", r.log},
         {"ok", r.ok}};
}

void from_json(const json &j, SuiteReport &r) {
    r.seed = j.at("seed").get<std::uint64_t>();
    r.count = j.at("count").get<int>();
    r.k_max = j.at("k_max").get<int>();
    r.n_max = j.at("n_max").get<int>();
    r.tolerance = j.at("tolerance").get<double>();
    r.properties = j.at("properties").get<std::vector<PropertyResult>>();
    r.skipped_draws = j.at("skipped_draws").get<int>();
    r.log = j.at("log").get<std::vector<std::string>>();
    r.ok = j.at("ok").get<bool>();
}

std::string render_table(const DegreesReport &r) {
    std::ostringstream os;
    os << "map: " << r.kind << ", k = " << r.k;
    if (r.l)
        os << ", dim Y = " << *r.l;
    os << ", N = " << r.n_max << ", tol = " << r.tolerance << "\n";
    for (const auto &w : r.warnings)
        os << "warning: " << w << "\n";
    if (!r.multidegrees.empty()) {
        os << "lambda_1 row:";
        if (const auto *s = find_seq(r.sequences, Quantity::lambda, 1))
            for (std::size_t n = 1; n < s->values.size(); ++n)
                os << (n > 1 ? "," : " ") << s->values[n].get_str();
        os << "\n";
    }
    os << std::left << std::setw(4) << "p" << std::setw(16) << "lambda_p(N)" << std::setw(12)
       << "root_est" << std::setw(12) << "ratio_est" << std::setw(16) << "oracle"
       << "flag\n";
    for (int p = 0; p <= r.k; ++p) {
        const auto *s = find_seq(r.sequences, Quantity::lambda, p);
        if (!s)
            continue;
        os << std::left << std::setw(4) << p << std::setw(16) << short_int(s->values.back())
           << std::setw(12) << fmt(s->estimate.root_estimate, 4) << std::setw(12)
           << fmt(s->estimate.ratio_estimate, 4) << std::setw(16)
           << (r.oracle ? fmt(r.oracle->degrees[static_cast<std::size_t>(p)], 10) : std::string("-"))
           << (s->estimate.converged ? "CONVERGED" : "NOT CONVERGED") << "\n";
    }
    os << "d(f)   = " << profile_row(r.profile.degrees) << "\n";
    if (r.l) {
        os << "d(f|pi) = " << profile_row(r.profile.relative) << "\n";
        os << "d(g)   = " << profile_row(r.profile.base) << "\n";
    }
    if (r.concavity)
        os << "log-concavity (estimates): " << to_string(r.concavity->verdict) << "\n";
    if (r.oracle_concavity)
        os << "log-concavity (oracle):    " << to_string(r.oracle_concavity->verdict) << "\n";
    if (r.distinctness)
        os << "distinct consecutive: f " << (r.distinctness->f_distinct ? "yes" : "no") << ", g "
           << (r.distinctness->g_distinct ? "yes" : "no") << ", f|pi "
           << (r.distinctness->relative_distinct ? "yes" : "no") << " -> implication "
           << to_string(r.distinctness->implication) << "\n";
    if (r.product) {
        std::ostringstream ps;
        product_table(ps, *r.product, "product formula (estimates)");
        os << ps.str();
    }
    return os.str();
}

std::string render_table(const VerifyReport &r) {
    std::ostringstream os;
    os << "verify-product: " << r.kind << ", k = " << r.k << ", dim Y = " << r.l
       << ", N = " << r.n_max << ", tol = " << r.tolerance << "\n";
    for (const auto &w : r.warnings)
        os << "warning: " << w << "\n";
    product_table(os, r.estimate_level, "estimate level");
    if (r.oracle_level)
        product_table(os, *r.oracle_level, "oracle level");
    product_table(os, r.lower_bound, "lower bound");
    os << "verdict: " << to_string(r.verdict) << "\n";
    return os.str();
}

std::string render_table(const SequenceReport &r) {
    std::ostringstream os;
    os << "sequences: " << r.kind << ", k = " << r.k << ", N = " << r.n_max << "\n";
    for (const auto &s : r.sequences) {
        os << to_string(s.label) << " p=" << s.p;
        if (s.q)
            os << " q=" << *s.q;
        os << ":";
        for (const auto &v : s.values)
            os << " " << short_int(v);
        os << "  -> " << fmt(s.estimate.chosen, 6)
           << (s.estimate.converged ? "" : " (not converged)") << "\n";
    }
    return os.str();
}

std::string render_table(const SuiteReport &r) {
    std::ostringstream os;
    os << "suite: seed " << r.seed << ", " << r.count << " matrices, k <= " << r.k_max << ", N = "
       << r.n_max << ", tol = " << r.tolerance << "\n";
    os << "skipped singular draws: " << r.skipped_draws << "\n";
    os << std::left << std::setw(26) << "property" << std::setw(9) << "passed" << std::setw(9)
       << "failed" << "inconclusive\n";
    for (const auto &p : r.properties) {
        os << std::left << std::setw(26) << p.name << std::setw(9) << p.passed << std::setw(9)
           << p.failed << p.inconclusive << "\n";
        for (const auto &f : p.failures)
            os << "    failure: " << f << "\n";
    }
    os << "result: " << (r.ok ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string to_csv(const SequenceReport &r) {
    std::ostringstream os;
    os << "p,n,lambda_p,root_est,ratio_est\n";
    os << std::setprecision(17);
    for (const auto &s : r.sequences) {
        if (s.label != Quantity::lambda)
            continue;
        for (std::size_t n = 0; n < s.values.size(); ++n) {
            os << s.p << "," << n << "," << s.values[n].get_str() << ",";
            if (n >= 1)
                os << std::exp(log_of(s.values[n]) / static_cast<double>(n));
            os << ",";
            if (n >= 2)
                os << std::exp(log_of(s.values[n]) - log_of(s.values[n - 1]));
            os << "\n";
        }
    }
    return os.str();
}

std::string to_csv(const DegreesReport &r) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "quantity,p,q,value_N,root_est,ratio_est,chosen,converged,oracle\n";
    for (const auto &s : r.sequences) {
        os << to_string(s.label) << "," << s.p << "," << (s.q ? std::to_string(*s.q) : "") << ","
           << s.values.back().get_str() << "," << s.estimate.root_estimate << ","
           << s.estimate.ratio_estimate << "," << s.estimate.chosen << ","
           << (s.estimate.converged ? "true" : "false") << ",";
        if (r.oracle) {
            const auto idx = static_cast<std::size_t>(s.p);
            const std::vector<double> *src = nullptr;
            if (s.label == Quantity::lambda)
                src = &r.oracle->degrees;
            else if (s.label == Quantity::relative)
                src = &r.oracle->relative;
            else if (s.label == Quantity::c)
                src = &r.oracle->base;
            if (src && idx < src->size())
                os << (*src)[idx];
        }
        os << "\n";
    }
    return os.str();
}

std::string to_csv(const VerifyReport &r) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "level,p,lhs,rhs,argmax,rel_error,verdict\n";
    auto rows = [&](const ProductReport &pr, const char *level) {
        for (const auto &row : pr.rows) {
            std::string am;
            for (std::size_t i = 0; i < row.argmax.size(); ++i)
                am += (i ? ";" : "") + std::to_string(row.argmax[i]);
            os << level << "," << row.p << "," << row.lhs << "," << row.rhs << "," << am << ","
               << row.rel_error << "," << to_string(row.verdict) << "\n";
        }
    };
    rows(r.estimate_level, "estimate");
    if (r.oracle_level)
        rows(*r.oracle_level, "oracle");
    rows(r.lower_bound, "lower_bound");
    return os.str();
}

std::string to_csv(const SuiteReport &r) {
    std::ostringstream os;
    os << "property,passed,failed,inconclusive,seed\n";
    for (const auto &p : r.properties)
        os << p.name << "," << p.passed << "," << p.failed << "," << p.inconclusive << ","
           << r.seed << "\n";
    return os.str();
}

} // namespace dyndeg
