// dyndeg: command-line front end.
//
// Exit codes: 0 success, 1 validation error, 2 engine error,
// 3 acceptance failure (suite property failure or verify-product FAIL).

#include "dyndeg/error.hpp"
#include "dyndeg/jobs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using dyndeg::InvalidArgument;
using nlohmann::json;

struct Options {
    std::string input;
    std::optional<int> n_max;
    std::optional<double> tol;
    std::optional<long long> seed;
    std::optional<int> degree_cap;
    std::optional<int> count;
    std::optional<int> k_max;
    std::string format;
    std::string out;
};

json load_document(const std::string &path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw InvalidArgument("cannot open input file '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error &e) {
        throw InvalidArgument("input '" + path + "' is not valid JSON: " + e.what());
    }
}

// Command-line values take precedence over the document; parse_job validates both.
void apply_overrides(json &doc, const Options &o) {
    if (o.n_max)
        doc["n_max"] = *o.n_max;
    if (o.tol)
        doc["tolerance"] = *o.tol;
    if (o.seed)
        doc["seed"] = *o.seed;
    if (o.degree_cap)
        doc["degree_cap"] = *o.degree_cap;
    if (o.count)
        doc["count"] = *o.count;
    if (o.k_max)
        doc["k_max"] = *o.k_max;
}

template <typename Report> std::string machine(const Report &r, const std::string &format) {
    if (format == "json")
        return dyndeg::to_json_text(r);
    if (format == "csv")
        return dyndeg::to_csv(r);
    return dyndeg::render_table(r);
}

template <typename Report> void emit(const Report &r, const Options &o) {
    if (o.out.empty()) {
        std::cout << machine(r, o.format.empty() ? "table" : o.format);
        return;
    }
    std::cout << dyndeg::render_table(r);
    std::ofstream f(o.out);
    if (!f)
        throw InvalidArgument("cannot write output file '" + o.out + "'");
    f << machine(r, o.format.empty() ? "json" : o.format);
}

int run(const std::string &command, const Options &o) {
    if (command == "suite") {
        json doc = o.input.empty() ? json::object() : load_document(o.input);
        apply_overrides(doc, o);
        const auto job = dyndeg::parse_suite_job(doc);
        const auto report = dyndeg::cmd_suite(job);
        emit(report, o);
        return report.ok ? 0 : 3;
    }
    if (o.input.empty())
        throw InvalidArgument("--input is required for '" + command + "'");
    json doc = load_document(o.input);
    apply_overrides(doc, o);
    const auto job = dyndeg::parse_job(doc);
    if (command == "degrees") {
        emit(dyndeg::cmd_degrees(job), o);
    } else if (command == "verify-product") {
        const auto report = dyndeg::cmd_verify_product(job);
        emit(report, o);
        return report.verdict == dyndeg::Verdict::fail ? 3 : 0;
    } else {
        emit(dyndeg::cmd_sequence(job), o);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Dynamical degrees of monomial and multihomogeneous rational maps"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--input", o.input, "Job document (JSON); '-' reads standard input");
        sub->add_option("--n-max", o.n_max, "Largest iterate N");
        sub->add_option("--tol", o.tol, "Relative tolerance for estimate comparisons");
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--degree-cap", o.degree_cap,
                        "Stop rational iteration once the predicted degree exceeds this");
        sub->add_option("--format", o.format, "table | csv | json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        sub->add_option("--out", o.out, "Write the machine report to this file");
    };

    std::vector<std::pair<std::string, CLI::App *>> subs;
    for (const auto &[name, help] :
         {std::pair<const char *, const char *>{"degrees", "Degree profile with verdicts"},
          {"verify-product", "Check the product formula for a fibered map"},
          {"sequence", "Raw degree sequences and plot data"},
          {"suite", "Randomized property suite over fibered monomial maps"}}) {
        auto *sub = app.add_subcommand(name, help);
        add_common(sub);
        if (std::string(name) == "suite") {
            sub->add_option("--count", o.count, "Number of random matrices");
            sub->add_option("--k-max", o.k_max, "Largest dimension");
        }
        subs.emplace_back(name, sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::string command;
    for (const auto &[name, sub] : subs)
        if (sub->parsed())
            command = name;

    try {
        return run(command, o);
    } catch (const dyndeg::InvalidArgument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return 2;
    }
}
