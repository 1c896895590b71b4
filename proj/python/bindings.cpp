#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schubert/complex.hpp"
#include "schubert/ideal.hpp"
#include "schubert/io.hpp"
#include "schubert/poly.hpp"
#include "schubert/superlabel.hpp"
#include "schubert/verify.hpp"

namespace py = pybind11;
using namespace schubert;

namespace {

Permutation perm(const std::string& w) { return parse_permutation(w); }

// Rows of ints or "p/q" strings.
Matrix<mpq_class> matrix(const std::vector<std::vector<py::object>>& rows) {
    const std::size_t n = rows.size();
    Matrix<mpq_class> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("matrix must be square");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_rational(py::str(rows[i][j]).cast<std::string>());
    }
    return m;
}

py::object from_json(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_schubert, m) {
    m.doc() = "Double Schubert polynomials, balanced super labelings and Schubert complexes";

    m.def("double_schubert", [](const std::string& w) { return to_string(double_schubert(perm(w))); }, py::arg("w"));
    m.def("single_schubert", [](const std::string& w) { return to_string(single_schubert(perm(w))); }, py::arg("w"));
    m.def("evaluate", [](const std::string& w, long x, long y) {
        return evaluate_uniform(double_schubert(perm(w)), x, y).get_str();
    }, py::arg("w"), py::arg("x"), py::arg("y"));

    m.def("bsl_count", [](const std::string& w) { return enumerate_bsl(perm(w)).size(); }, py::arg("w"));
    m.def("enumerate_bsl", [](const std::string& w) {
        std::vector<std::string> out;
        for (const auto& t : enumerate_bsl(perm(w))) out.push_back(to_string(t));
        return out;
    }, py::arg("w"));

    m.def("complex_ranks", [](const std::string& w) { return term_ranks(perm(w)); }, py::arg("w"));
    m.def("dd_zero", [](const std::string& w) {
        const auto p = perm(w);
        return verify_dd_zero(build_complex(p, FlaggedMap::generic(p.size())));
    }, py::arg("w"));
    m.def("homology", [](const std::string& w, const std::vector<std::vector<py::object>>& rows, bool mod_p) {
        auto a = matrix(rows);
        const auto map = mod_p ? FlaggedMap::prime_field(std::move(a), default_prime()) : FlaggedMap::rational(std::move(a));
        py::gil_scoped_release release;
        return homology_ranks(build_complex(perm(w), map));
    }, py::arg("w"), py::arg("matrix"), py::arg("mod_p") = false);

    m.def("ideal_generators", [](const std::string& w) {
        std::vector<std::string> out;
        for (const auto& g : ideal_generators(perm(w).inverse())) out.push_back(to_string(g));
        return out;
    }, py::arg("w"));
    m.def("locus_membership", [](const std::string& w, const std::vector<std::vector<py::object>>& rows) {
        return locus_membership(perm(w), matrix(rows));
    }, py::arg("w"), py::arg("matrix"));

    m.def("verify", [](const std::string& suite, std::uint64_t seed, unsigned threads) {
        SuiteReport r;
        {
            py::gil_scoped_release release;
            r = run_suite(suite, seed, threads);
        }
        return from_json(r.to_json());
    }, py::arg("suite"), py::arg("seed") = 1, py::arg("threads") = 0);
}
