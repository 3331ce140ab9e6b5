// Python bindings: thin wrappers returning native Python containers and
// strings; all arithmetic stays exact on the C++ side.

#include "spinq/kostka.hpp"
#include "spinq/partition.hpp"
#include "spinq/repn.hpp"
#include "spinq/schurq.hpp"
#include "spinq/serialize.hpp"
#include "spinq/specialize.hpp"
#include "spinq/symfunc.hpp"
#include "spinq/tableaux.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace spinq;

namespace {

using Parts = std::vector<int>;

Partition part(const Parts& p) { return Partition(p); }

std::vector<std::pair<Parts, std::string>> py_qexpand(const Parts& shape,
                                                      const std::string& basis) {
    SymF f = convert(Q_lambda(part(shape)), basis_parse(basis));
    std::vector<std::pair<Parts, std::string>> out;
    for (const auto& [lam, c] : f.coeffs) out.emplace_back(lam.parts(), rat_str(c));
    return out;
}

std::vector<std::pair<Parts, std::vector<long long>>> py_char_table(int n, bool spin) {
    auto table = spin ? char_table_spin(n) : char_table_symmetric(n);
    auto classes = enumerate_partitions(n, spin ? Family::Odd : Family::All);
    std::vector<std::pair<Parts, std::vector<long long>>> out;
    for (const auto& cv : table) {
        std::vector<long long> row;
        for (const auto& alpha : classes) row.push_back(to_i64(cv.values.at(alpha)));
        out.emplace_back(cv.label.parts(), std::move(row));
    }
    return out;
}

std::vector<std::vector<std::string>> py_spin_kostka_matrix(int n) {
    std::vector<std::vector<std::string>> out;
    for (const auto& xi : enumerate_partitions(n, Family::Strict)) {
        std::vector<std::string> row;
        for (const auto& mu : enumerate_partitions(n)) row.push_back(spin_kostka(xi, mu).str());
        out.push_back(std::move(row));
    }
    return out;
}

bool py_verify(const std::string& suite, int n) {
    if (suite == "cauchy") {
        for (int k = 1; k <= n; ++k)
            if (!verify_cauchy_gamma(k)) return false;
        return true;
    }
    if (suite == "spinkostka") {
        for (int k = 1; k <= n; ++k)
            if (!spin_kostka_property_suite(k).ok) return false;
        return true;
    }
    if (suite == "relations") {
        for (int k = 1; k <= n; ++k)
            for (const auto& xi : enumerate_partitions(k, Family::Strict))
                if (!verify_relations(seminormal_module(xi), true).ok) return false;
        return true;
    }
    if (suite == "sergeev") {
        for (int k = 1; k <= n; ++k)
            for (int d = 1; d <= n; ++d)
                if (!sergeev_dimension_check(k, d)) return false;
        return true;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace

PYBIND11_MODULE(_spinq, m) {
    m.doc() = "Exact Schur Q-function, Kostka polynomial and seminormal module computations";

    m.def("qexpand", &py_qexpand, py::arg("shape"), py::arg("basis") = "m",
          "Expansion of Q_xi in the given basis as [(partition, coefficient)]");
    m.def(
        "kostka",
        [](const Parts& lam, const Parts& mu) { return kostka_poly(part(lam), part(mu)).str(); },
        py::arg("lam"), py::arg("mu"), "Kostka polynomial K_{lam,mu}(t)");
    m.def(
        "spin_kostka",
        [](const Parts& xi, const Parts& mu) { return spin_kostka(part(xi), part(mu)).str(); },
        py::arg("xi"), py::arg("mu"), "Spin Kostka polynomial K^-_{xi,mu}(t)");
    m.def("spin_kostka_matrix", &py_spin_kostka_matrix, py::arg("n"),
          "Matrix of spin Kostka polynomials, strict rows x all columns (ascending order)");
    m.def(
        "schur_coeffs",
        [](const Parts& xi) {
            std::vector<std::pair<Parts, long long>> out;
            for (const auto& [lam, c] : b_coeffs(part(xi))) out.emplace_back(lam.parts(), to_i64(c));
            return out;
        },
        py::arg("xi"), "Schur-basis coefficients of Q_xi");
    m.def(
        "fake_degree",
        [](const Parts& lam) { return fake_degree(part(lam)).coinv.str(); }, py::arg("lam"),
        "Graded multiplicity in the coinvariant algebra");
    m.def(
        "spin_fake_degree",
        [](const Parts& xi) { return spin_graded(part(xi)).coinv.str(); }, py::arg("xi"),
        "Graded multiplicity in the Clifford-twisted coinvariant algebra");
    m.def("char_table", &py_char_table, py::arg("n"), py::arg("spin") = false,
          "Character table as [(label, row)], columns in ascending class order");
    m.def(
        "partitions",
        [](int n, const std::string& family) {
            std::vector<Parts> out;
            for (const auto& p : enumerate_partitions(n, family_parse(family))) out.push_back(p.parts());
            return out;
        },
        py::arg("n"), py::arg("family") = "all", "Partitions of n of the given family");
    m.def(
        "hooks",
        [](const Parts& lam, bool shifted) {
            return (shifted ? shifted_hooks(part(lam)) : hooks(part(lam))).rows();
        },
        py::arg("lam"), py::arg("shifted") = false, "Hook lengths, row by row");
    m.def(
        "standard_shifted_count",
        [](const Parts& outer, const Parts& inner) {
            return to_i64(standard_shifted_count(part(outer), part(inner)));
        },
        py::arg("outer"), py::arg("inner") = Parts{}, "Number of standard shifted tableaux");
    m.def(
        "degree",
        [](const Parts& xi) { return to_i64(degree_formula(part(xi))); }, py::arg("xi"),
        "Degree of the spin irreducible labelled by a strict partition");
    m.def(
        "seminormal",
        [](const Parts& outer, const Parts& inner, bool affine) {
            Rep r = seminormal_module(part(outer), part(inner));
            PropertyReport rel = verify_relations(r, affine);
            json j = rep_json(r);
            j["relations_verified"] = rel.ok;
            return j.dump(2);
        },
        py::arg("outer"), py::arg("inner") = Parts{}, py::arg("affine") = false,
        "Seminormal module with generator matrices, as a JSON string");
    m.def("verify", &py_verify, py::arg("suite"), py::arg("n"),
          "Run a verification suite: cauchy | spinkostka | relations | sergeev");
}
