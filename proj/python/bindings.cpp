#include "dyndeg/error.hpp"
#include "dyndeg/jobs.hpp"
#include "dyndeg/monomial.hpp"
#include "dyndeg/oracle.hpp"
#include "dyndeg/rational.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dyndeg;

namespace {

py::int_ to_py(const Integer &x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer> &v) {
    py::list out;
    for (const auto &x : v)
        out.append(to_py(x));
    return out;
}

Integer from_py(const py::handle &h) {
    if (!py::isinstance<py::int_>(h))
        throw InvalidArgument("expected an integer entry");
    return Integer(py::str(h).cast<std::string>());
}

IntMatrix matrix_from_py(const py::sequence &rows) {
    const std::size_t k = py::len(rows);
    if (k == 0)
        throw InvalidArgument("matrix must be nonempty");
    IntMatrix a(k, py::len(rows[0]));
    for (std::size_t i = 0; i < k; ++i) {
        const py::sequence row = rows[i];
        if (py::len(row) != a.cols())
            throw InvalidArgument("matrix rows must have equal length");
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(i, j) = from_py(row[j]);
    }
    return a;
}

py::list matrix_to_py(const IntMatrix &a) {
    py::list rows;
    for (const auto &r : a.to_rows())
        rows.append(to_py(r));
    return rows;
}

MonomialMap monomial(const py::sequence &rows, std::optional<int> l) {
    return MonomialMap(matrix_from_py(rows), l);
}

// Reports cross the boundary as JSON text; the Python side turns them into dicts.
template <typename Fn> std::string command(const std::string &job, Fn fn) {
    const auto doc = nlohmann::json::parse(job);
    return to_json_text(fn(doc));
}

} // namespace

PYBIND11_MODULE(_dyndeg, m) {
    m.doc() = "Dynamical degrees of monomial and multihomogeneous rational maps";

    auto invalid = py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<FibrationError>(m, "FibrationError", invalid.ptr());
    auto computation = py::register_exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError);
    py::register_exception<DegenerateComposition>(m, "DegenerateComposition", computation.ptr());

    m.def("_degrees", [](const std::string &job) {
        return command(job, [](const nlohmann::json &d) { return cmd_degrees(parse_job(d)); });
    });
    m.def("_verify_product", [](const std::string &job) {
        return command(job, [](const nlohmann::json &d) { return cmd_verify_product(parse_job(d)); });
    });
    m.def("_sequence", [](const std::string &job) {
        return command(job, [](const nlohmann::json &d) { return cmd_sequence(parse_job(d)); });
    });
    m.def("_suite", [](const std::string &job) {
        return command(job, [](const nlohmann::json &d) { return cmd_suite(parse_suite_job(d)); });
    });
    m.def("_render_table", [](const std::string &report) {
        const auto doc = nlohmann::json::parse(report);
        const std::string kind = doc.at("report").get<std::string>();
        if (kind == "degrees")
            return render_table(doc.get<DegreesReport>());
        if (kind == "verify-product")
            return render_table(doc.get<VerifyReport>());
        if (kind == "sequence")
            return render_table(doc.get<SequenceReport>());
        return render_table(doc.get<SuiteReport>());
    });
    m.def("_sequence_csv", [](const std::string &report) {
        return to_csv(nlohmann::json::parse(report).get<SequenceReport>());
    });

    m.def("lambda_sequence",
          [](const py::sequence &a, int p, int n_max) { return to_py(lambda_sequence(monomial(a, std::nullopt), p, n_max)); },
          py::arg("matrix"), py::arg("p"), py::arg("n_max"),
          "lambda_p(f^n) for n = 0..n_max of the monomial map with matrix A.");
    m.def("relative_sequence",
          [](const py::sequence &a, int l, int p, int n_max) { return to_py(relative_sequence(monomial(a, l), p, n_max)); },
          py::arg("matrix"), py::arg("fibration_dim"), py::arg("p"), py::arg("n_max"));
    m.def("a_sequence",
          [](const py::sequence &a, int l, int q, int p, int n_max) { return to_py(a_sequence(monomial(a, l), q, p, n_max)); },
          py::arg("matrix"), py::arg("fibration_dim"), py::arg("q"), py::arg("p"), py::arg("n_max"));
    m.def("b_sequence",
          [](const py::sequence &a, int l, int p, int n_max) { return to_py(b_sequence(monomial(a, l), p, n_max)); },
          py::arg("matrix"), py::arg("fibration_dim"), py::arg("p"), py::arg("n_max"));
    m.def("compound", [](const py::sequence &a, int p) { return matrix_to_py(compound(matrix_from_py(a), p).matrix); },
          py::arg("matrix"), py::arg("p"));
    m.def("eigen_degrees", [](const py::sequence &a) { return eigen_degrees(matrix_from_py(a)).degrees; },
          py::arg("matrix"), "Exact-spectrum degrees d_0..d_k: products of the largest eigenvalue moduli.");
    m.def("characteristic_polynomial",
          [](const py::sequence &a) { return to_py(characteristic_polynomial(matrix_from_py(a))); }, py::arg("matrix"),
          "Coefficients of det(tI - A), constant term first.");
    m.def("estimate",
          [](const py::sequence &values, double tol) {
              DegreeSequence s;
              for (const auto &v : values)
                  s.values.push_back(from_py(v));
              const DegreeEstimate e = estimate(s, tol);
              py::dict d;
              d["root_estimate"] = e.root_estimate;
              d["ratio_estimate"] = e.ratio_estimate;
              d["converged"] = e.converged;
              d["chosen"] = e.chosen;
              return d;
          },
          py::arg("values"), py::arg("tol") = kEstimateTolerance);
    m.def("rational_degrees",
          [](const std::vector<int> &factors, const std::vector<std::vector<std::string>> &components, int n_max,
             int degree_cap) {
              const RationalMap f = RationalMap::parse(Space(factors), components);
              const IterateResult it = iterate_multidegrees(f, n_max, degree_cap);
              py::dict d;
              d["lambda1"] = to_py(it.lambda1);
              d["multidegrees"] = it.degrees;
              d["reached"] = it.reached;
              d["truncated"] = it.truncated;
              return d;
          },
          py::arg("factors"), py::arg("components"), py::arg("n_max") = kDefaultIterations,
          py::arg("degree_cap") = kDefaultDegreeCap,
          "Multidegrees and lambda_1 of the iterates of a multihomogeneous rational map.");
    m.def("variable_names", [](const std::vector<int> &factors) { return variable_names(Space(factors)); },
          py::arg("factors"));
}
