// spinq: batch command-line front end over the library.
//
// Subcommands: qexpand, kostka, spinkostka, chartable, fakedegree, seminormal,
// hooks, verify. Output formats: csv (default), json, latex. Exit codes:
// 0 success, 1 verification failure, 2 usage error. Output is
// byte-deterministic for a fixed command (all containers are ordered maps).

#include "spinq/kostka.hpp"
#include "spinq/partition.hpp"
#include "spinq/repn.hpp"
#include "spinq/schurq.hpp"
#include "spinq/serialize.hpp"
#include "spinq/specialize.hpp"
#include "spinq/symfunc.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace spinq;

enum class Fmt { csv, json, latex };

Fmt fmt_parse(const std::string& s) {
    if (s == "csv") return Fmt::csv;
    if (s == "json") return Fmt::json;
    if (s == "latex") return Fmt::latex;
    throw CLI::ValidationError("--format", "expected csv, json or latex");
}

std::string latex_parts(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
    return s + ")";
}

/// Labelled matrix of polynomial entries, printed in the selected format.
struct PolyTable {
    std::vector<Partition> rows, cols;
    std::vector<std::vector<Poly>> entries;

    void print(Fmt f, std::ostream& os) const {
        switch (f) {
            case Fmt::csv: {
                os << "\"\"";
                for (const auto& c : cols) os << ",\"" << c.str() << "\"";
                os << "\n";
                for (size_t i = 0; i < rows.size(); ++i) {
                    os << "\"" << rows[i].str() << "\"";
                    for (const auto& e : entries[i]) os << "," << e.str();
                    os << "\n";
                }
                break;
            }
            case Fmt::json: {
                json j;
                j["rows"] = json::array();
                for (const auto& r : rows) j["rows"].push_back(partition_json(r));
                j["cols"] = json::array();
                for (const auto& c : cols) j["cols"].push_back(partition_json(c));
                j["entries"] = json::array();
                for (const auto& row : entries) {
                    json jr = json::array();
                    for (const auto& e : row) jr.push_back(e.str());
                    j["entries"].push_back(jr);
                }
                os << j.dump(2) << "\n";
                break;
            }
            case Fmt::latex: {
                os << "\\begin{array}{r|" << std::string(cols.size(), 'c') << "}\n";
                for (const auto& c : cols) os << " & " << latex_parts(c);
                os << " \\\\\\hline\n";
                for (size_t i = 0; i < rows.size(); ++i) {
                    os << latex_parts(rows[i]);
                    for (const auto& e : entries[i]) os << " & " << poly_latex(e);
                    os << " \\\\\n";
                }
                os << "\\end{array}\n";
                break;
            }
        }
    }
};

void print_poly(const Poly& p, Fmt f, std::ostream& os) {
    switch (f) {
        case Fmt::csv: os << p.str() << "\n"; break;
        case Fmt::json: os << json{{"polynomial", p.str()}}.dump(2) << "\n"; break;
        case Fmt::latex: os << poly_latex(p) << "\n"; break;
    }
}

void print_symf(const SymF& f, Fmt fm, std::ostream& os) {
    switch (fm) {
        case Fmt::csv:
            for (const auto& [lam, c] : f.coeffs)
                os << "\"" << lam.str() << "\"," << rat_str(c) << "\n";
            break;
        case Fmt::json: os << symf_json(f).dump(2) << "\n"; break;
        case Fmt::latex: {
            bool first = true;
            for (const auto& [lam, c] : f.coeffs) {
                Rat a = c;
                if (!first) {
                    os << (a < 0 ? " - " : " + ");
                    if (a < 0) a = -a;
                } else if (a < 0) {
                    os << "-";
                    a = -a;
                }
                first = false;
                if (a != 1) os << rat_str(a) << "\\,";
                os << basis_name(f.basis) << "_{" << latex_parts(lam) << "}";
            }
            os << "\n";
            break;
        }
    }
}

int cmd_qexpand(const std::string& shape, const std::string& basis, Fmt f) {
    Partition xi = Partition::parse(shape);
    SymF q = convert(Q_lambda(xi), basis_parse(basis));
    print_symf(q, f, std::cout);
    return 0;
}

int cmd_kostka(const std::string& lam, const std::string& mu, Fmt f) {
    print_poly(kostka_poly(Partition::parse(lam), Partition::parse(mu)), f, std::cout);
    return 0;
}

int cmd_spinkostka(int n, Fmt f) {
    PolyTable t;
    t.rows = enumerate_partitions(n, Family::Strict);
    t.cols = enumerate_partitions(n);
    for (const auto& xi : t.rows) {
        std::vector<Poly> row;
        for (const auto& mu : t.cols) row.push_back(spin_kostka(xi, mu));
        t.entries.push_back(std::move(row));
    }
    t.print(f, std::cout);
    return 0;
}

int cmd_chartable(int n, bool spin, Fmt f) {
    auto table = spin ? char_table_spin(n) : char_table_symmetric(n);
    PolyTable t;
    t.cols = enumerate_partitions(n, spin ? Family::Odd : Family::All);
    for (const auto& cv : table) {
        t.rows.push_back(cv.label);
        std::vector<Poly> row;
        for (const auto& alpha : t.cols) row.push_back(Poly(Rat(cv.values.at(alpha))));
        t.entries.push_back(std::move(row));
    }
    t.print(f, std::cout);
    return 0;
}

int cmd_fakedegree(const std::string& shape, bool spin, int order, Fmt f) {
    Partition lam = Partition::parse(shape);
    if (spin) {
        SpinGraded sg = spin_graded(lam, order, order);
        switch (f) {
            case Fmt::csv: std::cout << sg.coinv.str() << "\n"; break;
            case Fmt::latex: std::cout << poly_latex(sg.coinv) << "\n"; break;
            case Fmt::json:
                std::cout << json{{"shape", partition_json(lam)},
                                  {"spin", true},
                                  {"coinvariant", sg.coinv.str()},
                                  {"full", sg.d.str()},
                                  {"two_parameter", sg.dhat.str()},
                                  {"super", sg.dtilde.str()},
                                  {"order", order}}
                                 .dump(2)
                          << "\n";
                break;
        }
    } else {
        FakeDegree fd = fake_degree(lam);
        switch (f) {
            case Fmt::csv: std::cout << fd.coinv.str() << "\n"; break;
            case Fmt::latex: std::cout << poly_latex(fd.coinv) << "\n"; break;
            case Fmt::json:
                std::cout << json{{"shape", partition_json(lam)},
                                  {"spin", false},
                                  {"coinvariant", fd.coinv.str()},
                                  {"full", fd.full.str()},
                                  {"order", order}}
                                 .dump(2)
                          << "\n";
                break;
        }
    }
    return 0;
}

int cmd_seminormal(const std::string& shape, const std::string& inner, bool affine) {
    Partition outer = Partition::parse(shape);
    Partition in = inner.empty() ? Partition() : Partition::parse(inner);
    Rep r = seminormal_module(outer, in);
    PropertyReport rel = verify_relations(r, affine);
    json j = rep_json(r);
    j["relations_verified"] = rel.ok;
    if (!rel.ok) j["failures"] = rel.failures;
    std::cout << j.dump(2) << "\n";
    if (!rel.ok) {
        for (const auto& s : rel.failures) std::cerr << "relation failed: " << s << "\n";
        return 1;
    }
    return 0;
}

int cmd_hooks(const std::string& shape, bool shifted, Fmt f) {
    Partition lam = Partition::parse(shape);
    CellGrid h = shifted ? shifted_hooks(lam) : hooks(lam);
    CellGrid c = shifted ? shifted_contents(lam) : contents(lam);
    switch (f) {
        case Fmt::csv:
            for (const auto& row : h.rows()) {
                for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? "," : "") << row[j];
                std::cout << "\n";
            }
            break;
        case Fmt::json:
            std::cout << json{{"shape", partition_json(lam)},
                              {"shifted", shifted},
                              {"hooks", h.rows()},
                              {"contents", c.rows()}}
                             .dump(2)
                      << "\n";
            break;
        case Fmt::latex: {
            std::cout << "\\begin{array}{" << std::string(lam.part(0) + lam.length(), 'c')
                      << "}\n";
            for (const auto& row : h.rows()) {
                for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? " & " : "") << row[j];
                std::cout << " \\\\\n";
            }
            std::cout << "\\end{array}\n";
            break;
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, int n) {
    bool ok = true;
    std::vector<std::string> failures;
    if (suite == "cauchy") {
        for (int k = 1; k <= n; ++k)
            if (!verify_cauchy_gamma(k)) {
                ok = false;
                failures.push_back("cauchy identity fails in degree " + std::to_string(k));
            }
    } else if (suite == "spinkostka") {
        for (int k = 1; k <= n; ++k) {
            PropertyReport r = spin_kostka_property_suite(k);
            if (!r.ok) {
                ok = false;
                failures.insert(failures.end(), r.failures.begin(), r.failures.end());
            }
        }
    } else if (suite == "relations") {
        for (int k = 1; k <= n; ++k)
            for (const auto& xi : enumerate_partitions(k, Family::Strict)) {
                PropertyReport r = verify_relations(seminormal_module(xi), true);
                if (!r.ok) {
                    ok = false;
                    for (const auto& s : r.failures) failures.push_back(xi.str() + ": " + s);
                }
            }
    } else if (suite == "sergeev") {
        for (int k = 1; k <= n; ++k)
            for (int d = 1; d <= n; ++d)
                if (!sergeev_dimension_check(k, d)) {
                    ok = false;
                    failures.push_back("dimension identity fails at n=" + std::to_string(k) +
                                       " d=" + std::to_string(d));
                }
    } else if (suite == "counting") {
        for (int k = 1; k <= n; ++k)
            if (enumerate_partitions(k, Family::Strict).size() !=
                enumerate_partitions(k, Family::Odd).size()) {
                ok = false;
                failures.push_back("strict/odd count mismatch at n=" + std::to_string(k));
            }
    } else {
        throw CLI::ValidationError(
            "--suite", "expected cauchy, spinkostka, relations, sergeev or counting");
    }
    if (ok) {
        std::cout << "suite " << suite << " (n <= " << n << "): ok\n";
        return 0;
    }
    for (const auto& s : failures) std::cerr << s << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with Schur Q-functions, (spin) Kostka polynomials,\n"
                 "graded multiplicities and seminormal Hecke-Clifford modules."};
    app.require_subcommand(1);

    std::string shape, inner, lam, mu, basis = "m", format = "csv", suite;
    int n = 0, order = 12;
    bool spin = false, affine = false, shifted = false;

    auto* qx = app.add_subcommand("qexpand", "Expand Q_xi in a symmetric function basis");
    qx->add_option("--shape", shape, "strict partition, e.g. 3,1")->required();
    qx->add_option("--basis", basis, "target basis: m|h|e|p|s (default m)");
    qx->add_option("--format", format, "csv|json|latex");

    auto* ko = app.add_subcommand("kostka", "Kostka polynomial K_{lambda,mu}(t)");
    ko->add_option("--lambda", lam, "partition")->required();
    ko->add_option("--mu", mu, "partition")->required();
    ko->add_option("--format", format, "csv|json|latex");

    auto* sk = app.add_subcommand("spinkostka", "Matrix of spin Kostka polynomials at size n");
    sk->add_option("--n", n, "size")->required();
    sk->add_option("--format", format, "csv|json|latex");

    auto* ct = app.add_subcommand("chartable", "Character table at size n");
    ct->add_option("--n", n, "size")->required();
    ct->add_flag("--spin", spin, "spin characters at odd classes");
    ct->add_option("--format", format, "csv|json|latex");

    auto* fd = app.add_subcommand("fakedegree", "Graded multiplicity in the coinvariant algebra");
    fd->add_option("--shape", shape, "partition (strict with --spin)")->required();
    fd->add_flag("--spin", spin, "spin fake degree of a strict shape");
    fd->add_option("--order", order, "series truncation order (default 12)");
    fd->add_option("--format", format, "csv|json|latex");

    auto* sn = app.add_subcommand("seminormal", "Seminormal module with verified relations");
    sn->add_option("--shape", shape, "strict partition")->required();
    sn->add_option("--inner", inner, "inner strict partition for a skew shape");
    sn->add_flag("--affine", affine, "also verify the polynomial-generator relations");
    sn->add_option("--out", format, "output format (json)");

    auto* hk = app.add_subcommand("hooks", "Hook lengths and contents of a diagram");
    hk->add_option("--shape", shape, "partition")->required();
    hk->add_flag("--shifted", shifted, "shifted diagram of a strict partition");
    hk->add_option("--format", format, "csv|json|latex");

    auto* vf = app.add_subcommand("verify", "Run a named verification suite");
    vf->add_option("--suite", suite, "cauchy|spinkostka|relations|sergeev|counting")->required();
    vf->add_option("--n", n, "size bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (qx->parsed()) return cmd_qexpand(shape, basis, fmt_parse(format));
        if (ko->parsed()) return cmd_kostka(lam, mu, fmt_parse(format));
        if (sk->parsed()) return cmd_spinkostka(n, fmt_parse(format));
        if (ct->parsed()) return cmd_chartable(n, spin, fmt_parse(format));
        if (fd->parsed()) return cmd_fakedegree(shape, spin, order, fmt_parse(format));
        if (sn->parsed()) return cmd_seminormal(shape, inner, affine);
        if (hk->parsed()) return cmd_hooks(shape, shifted, fmt_parse(format));
        if (vf->parsed()) return cmd_verify(suite, n);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
