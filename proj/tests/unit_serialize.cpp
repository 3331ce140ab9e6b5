#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinq/schurq.hpp"
#include "spinq/serialize.hpp"

using namespace spinq;

TEST_CASE("partition json round-trip") {
    Partition p{4, 3, 1};
    json j = partition_json(p);
    CHECK(j.dump() == "[4,3,1]");
    CHECK(partition_from_json(j) == p);
    CHECK(partition_from_json(partition_json(Partition{})) == Partition{});
}

TEST_CASE("signed permutation json round-trip") {
    SignedPerm g;
    g.perm = {2, 1, 3};
    g.signs = {1, -1, -1};
    json j = signed_perm_json(g);
    CHECK(j.at("signs").get<std::string>() == "+--");
    SignedPerm h = signed_perm_from_json(j);
    CHECK(h.perm == g.perm);
    CHECK(h.signs == g.signs);
}

TEST_CASE("symmetric function json round-trip") {
    SymF q = convert(Q_lambda(Partition{3, 1}), Basis::m);
    json j = symf_json(q);
    CHECK(j.at("basis") == "m");
    CHECK(j.at("degree") == 4);
    SymF back = symf_from_json(j);
    CHECK(back == q);

    SymF half = SymF::single(Basis::p, Partition{2}, Rat(1) / 2);
    CHECK(symf_from_json(symf_json(half)) == half);
}

TEST_CASE("radical scalar json round-trip") {
    RadExt v = RadExt(Rat(1) / 2) + RadExt::sqrt_term(2, Rat(3));
    json j = radext_json(v);
    CHECK(j.dump() == "{\"1\":\"1/2\",\"2\":\"3\"}");
    CHECK(radext_from_json(j) == v);
    CHECK(radext_from_json(radext_json(RadExt())) == RadExt());
}

TEST_CASE("module json round-trip") {
    Rep r = seminormal_module(Partition{2, 1});
    json j = rep_json(r);
    Rep back = rep_from_json(j);
    CHECK(back.n == r.n);
    CHECK(back.dim == r.dim);
    CHECK(back.parity == r.parity);
    CHECK(back.label == r.label);
    for (const auto& [name, m] : r.gens) CHECK(back.gens.at(name) == m);
}

TEST_CASE("marked letters and tableau json") {
    CHECK(marked_letter_str(2) == "1'");
    CHECK(marked_letter_str(3) == "1");
    CHECK(marked_letter_str(4) == "2'");

    ShiftedTableau T = weight_to_tableau({1, 2, 0, 1, 0});
    json j = shifted_tableau_json(T);
    CHECK(j.at("shape") == partition_json(T.outer));
    int cells = 0;
    for (const auto& row : j.at("rows")) cells += (int)row.size();
    CHECK(cells == T.size());
}

TEST_CASE("latex polynomial printing") {
    Poly p = Poly(1) + Poly::t(2) * Rat(3) - Poly::t(1) * Poly::s(1);
    CHECK(poly_latex(p) == "1 - ts + 3 t^{2}");
    CHECK(poly_latex(Poly()) == "0");
    CHECK(poly_latex(Poly(Rat(1) / 2)) == "\\frac{1}{2}");
    RatFun f(Poly::t(1), Poly(1) - Poly::t(1));
    CHECK(ratfun_latex(f).substr(0, 6) == "\\frac{");
}
