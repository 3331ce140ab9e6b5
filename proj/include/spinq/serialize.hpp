#pragma once

// JSON (de)serialization and text formatting for the core types. All maps are
// ordered, so serialized output is byte-deterministic for a fixed input.

#include "spinq/partition.hpp"
#include "spinq/poly.hpp"
#include "spinq/radext.hpp"
#include "spinq/repn.hpp"
#include "spinq/symfunc.hpp"
#include "spinq/tableaux.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace spinq {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Partitions and signed permutations

inline json partition_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline json signed_perm_json(const SignedPerm& g) {
    std::string signs;
    for (int s : g.signs) signs += (s > 0 ? '+' : '-');
    return json{{"perm", g.perm}, {"signs", signs}};
}

inline SignedPerm signed_perm_from_json(const json& j) {
    SignedPerm g;
    g.perm = j.at("perm").get<std::vector<int>>();
    for (char c : j.at("signs").get<std::string>()) g.signs.push_back(c == '-' ? -1 : 1);
    if (g.perm.size() != g.signs.size())
        throw std::invalid_argument("perm/signs length mismatch");
    return g;
}

// ---------------------------------------------------------------------------
// Symmetric functions: {degree, basis, terms: [{partition, coeff}]}

inline json symf_json(const SymF& f) {
    json terms = json::array();
    for (const auto& [lam, c] : f.coeffs)
        terms.push_back(json{{"partition", partition_json(lam)}, {"coeff", rat_str(c)}});
    return json{{"degree", f.degree}, {"basis", basis_name(f.basis)}, {"terms", terms}};
}

inline SymF symf_from_json(const json& j) {
    SymF f(j.at("degree").get<int>(), basis_parse(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms"))
        f.add(partition_from_json(t.at("partition")),
              rat_parse(t.at("coeff").get<std::string>()));
    return f;
}

// ---------------------------------------------------------------------------
// Tableaux: {shape, inner, rows}; marked letters carry a trailing apostrophe.

/// Marked alphabet letter as text: 2k -> "k'", 2k+1 -> "k".
inline std::string marked_letter_str(int e) {
    int k = e / 2;
    return e % 2 == 0 ? std::to_string(k) + "'" : std::to_string(k);
}

inline json shifted_tableau_json(const ShiftedTableau& T) {
    json rows = json::array();
    for (int i = 0; i < T.outer.length(); ++i) {
        json row = json::array();
        for (int j = i + T.inner.part(i); j < i + T.outer.parts()[i]; ++j)
            row.push_back(std::to_string(T.cells.at({i, j})));
        rows.push_back(row);
    }
    return json{{"shape", partition_json(T.outer)},
                {"inner", partition_json(T.inner)},
                {"rows", rows}};
}

// ---------------------------------------------------------------------------
// Radical-extension scalars: {"1": "1/2", "2": "3"} means 1/2 + 3*sqrt(2).

inline json radext_json(const RadExt& v) {
    json o = json::object();
    for (const auto& [d, c] : v.terms()) o[std::to_string(d)] = rat_str(c);
    return o;
}

inline RadExt radext_from_json(const json& j) {
    RadExt v;
    for (const auto& [k, c] : j.items())
        v += RadExt::sqrt_term(std::stoll(k), rat_parse(c.get<std::string>()));
    return v;
}

inline json rmatrix_json(const RMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(radext_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline RMatrix rmatrix_from_json(const json& j) {
    int n = (int)j.size();
    RMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) m.at(i, jj) = radext_from_json(j.at(i).at(jj));
    return m;
}

// ---------------------------------------------------------------------------
// Modules: {label, n, dim, parity, generators: {name: matrix}}

inline json rep_json(const Rep& r) {
    json gens = json::object();
    for (const auto& [name, m] : r.gens) gens[name] = rmatrix_json(m);
    return json{{"label", r.label},
                {"n", r.n},
                {"dim", r.dim},
                {"parity", r.parity},
                {"generators", gens}};
}

inline Rep rep_from_json(const json& j) {
    Rep r;
    r.label = j.at("label").get<std::string>();
    r.n = j.at("n").get<int>();
    r.dim = j.at("dim").get<int>();
    r.parity = j.at("parity").get<std::vector<int>>();
    for (const auto& [name, m] : j.at("generators").items()) r.gens[name] = rmatrix_from_json(m);
    return r;
}

// ---------------------------------------------------------------------------
// Text formats for polynomials (LaTeX variant of the ascending-power print).

inline std::string poly_latex(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        Rat a = c;
        if (!first) {
            out += (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        } else if (a < 0) {
            out += "-";
            a = -a;
        }
        first = false;
        std::string mono;
        auto var = [](const std::string& v, int e) {
            if (e == 1) return v;
            return v + "^{" + std::to_string(e) + "}";
        };
        if (k[0] > 0) mono += var("t", k[0]);
        if (k[1] > 0) mono += var("s", k[1]);
        std::string cs = rat_str(a);
        if (cs.find('/') != std::string::npos) {
            auto slash = cs.find('/');
            cs = "\\frac{" + cs.substr(0, slash) + "}{" + cs.substr(slash + 1) + "}";
        }
        if (mono.empty()) out += cs;
        else if (a == 1) out += mono;
        else out += cs + " " + mono;
    }
    return out;
}

inline std::string ratfun_latex(const RatFun& f) {
    if (f.is_polynomial()) return poly_latex(f.num());
    return "\\frac{" + poly_latex(f.num()) + "}{" + poly_latex(f.den()) + "}";
}

}  // namespace spinq
