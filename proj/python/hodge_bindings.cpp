#include "hodge/characters.hpp"
#include "hodge/engine.hpp"
#include "hodge/hurwitz.hpp"
#include "hodge/oracles.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace hodge;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.to_string());
}

py::tuple key_tuple(const HodgeKey& key) {
    py::tuple psi(key.psi().entries().size());
    for (std::size_t i = 0; i < key.psi().entries().size(); ++i) psi[i] = key.psi().entries()[i];
    return py::make_tuple(key.genus(), key.lambda_index(), psi);
}

}  // namespace

PYBIND11_MODULE(_hodge, m) {
    m.doc() = "Exact Hodge integrals with at most one lambda class";

    py::class_<Engine>(m, "Engine")
        .def(py::init([](std::optional<std::filesystem::path> cache, int degree_slack) {
                 EngineOptions options;
                 options.cache_path = std::move(cache);
                 options.degree_slack = degree_slack;
                 return Engine(options);
             }),
             py::arg("cache") = py::none(), py::arg("degree_slack") = 32)
        .def(
            "compute",
            [](Engine& e, int g, int k, const std::vector<int>& psi) { return to_fraction(e.compute(g, k, psi)); },
            py::arg("genus"), py::arg("lambda_index"), py::arg("psi"))
        .def(
            "relation",
            [](Engine& e, int g, const std::vector<int>& exps, int d) {
                const ExponentTuple tuple(exps);
                const RelationRow row = e.relation(g, tuple, d);
                const UnknownGroup group = build_group(g, tuple);
                py::list unknowns, coeffs;
                for (std::size_t i = 0; i < group.unknowns.size(); ++i) {
                    unknowns.append(key_tuple(group.unknowns[i]));
                    coeffs.append(to_fraction(row.coefficients[i]));
                }
                py::dict out;
                out["d"] = d;
                out["unknowns"] = unknowns;
                out["coefficients"] = coeffs;
                out["constant"] = to_fraction(row.constant);
                return out;
            },
            py::arg("genus"), py::arg("e"), py::arg("d"))
        .def(
            "table",
            [](Engine& e, int max_dim) {
                py::dict out;
                for (const auto& key : e.fill_table(max_dim)) out[key_tuple(key)] = to_fraction(e.table().at(key));
                return out;
            },
            py::arg("max_dim"))
        .def("write_table", &Engine::write_table, py::arg("max_dim"), py::arg("path"))
        .def("verify_dims", [](Engine& e, int max_dim) {
            VerifyScope scope;
            scope.max_dim = max_dim;
            const VerifyReport report = verify(e, scope);
            return py::make_tuple(report.matched(), report.total());
        });

    m.def("hurwitz_weight", [](int d, const std::vector<int>& nu, int g_inf) {
        return to_fraction(hurwitz_weight(d, Partition(nu), g_inf));
    });
    m.def("burnside_double_hurwitz", [](const std::vector<int>& mu, const std::vector<int>& nu, int r) {
        return to_fraction(burnside_double_hurwitz(Partition(mu), Partition(nu), r));
    });
    m.def("oracle_lambda_g", [](int g, const std::vector<int>& psi) { return to_fraction(oracle_lambda_g(g, psi)); });
    m.def("oracle_genus0", [](const std::vector<int>& psi) { return to_fraction(oracle_genus0(psi)); });
    m.def("oracle_lambda_gm1_onepoint", [](int g) { return to_fraction(oracle_lambda_gm1_onepoint(g)); });
    m.def("reference_corpus", [] {
        py::list out;
        for (const auto& ref : reference_corpus()) out.append(py::make_tuple(key_tuple(ref.key), to_fraction(ref.value)));
        return out;
    });
}
