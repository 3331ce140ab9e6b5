#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinq/partition.hpp"
#include "spinq/poly.hpp"
#include "spinq/radext.hpp"
#include "spinq/tableaux.hpp"

#include <set>

using namespace spinq;

TEST_CASE("rational helpers") {
    CHECK(factorial(5) == 120);
    CHECK(binomial(7, 3) == 35);
    CHECK(pow2(-3) == Rat(1, 8));
    CHECK(rat_parse("-4/6") == Rat(-2, 3));
    CHECK(to_int(Rat(6, 2)) == 3);
    CHECK_THROWS(to_int(Rat(1, 2)));
}

TEST_CASE("polynomial ring in t and s") {
    Poly a = Poly::t(2) + Poly::t(0) * Rat(3);
    Poly b = Poly::t(1) - Poly::s(1);
    CHECK((a * b).eval(2, 5) == (Rat(4 + 3)) * (2 - 5));
    CHECK(Poly::t(1).str() == "t");
    Poly c = Poly::t(3) - Poly::t(0);
    Poly d = Poly::t(1) - Poly::t(0);
    CHECK(poly_divexact_t(c, d) == Poly::t(2) + Poly::t(1) + Poly::t(0));
    CHECK_THROWS(poly_divexact_t(Poly::t(1) + Poly::t(0), d));
}

TEST_CASE("rational functions and series") {
    RatFun f(Poly::t(0), Poly::t(0) - Poly::t(1));  // 1/(1-t)
    TruncSeries s = series_of(f, 5);
    for (int k = 0; k <= 5; ++k) CHECK(s[k] == 1);
    RatFun g = f * RatFun(Poly::t(0) - Poly::t(1), Poly::t(0));
    CHECK(g.is_polynomial());
    CHECK(g.as_polynomial() == Poly::t(0));
}

TEST_CASE("quadratic field extension") {
    RadExt r2 = RadExt::sqrt_term(2);
    CHECK(r2 * r2 == RadExt(2));
    CHECK(RadExt::sqrt_term(8) == RadExt::sqrt_term(2) * RadExt(2));
    CHECK(RadExt::sqrt_term(12) * RadExt::sqrt_term(3) == RadExt(6));
    RadExt x = RadExt(1) + r2 + RadExt::sqrt_term(3);
    CHECK(x * x.inverse() == RadExt(1));
    CHECK(RadExt::sqrt_of(Rat(9, 4)) == RadExt(Rat(3, 2)));
    CHECK(RadExt::sqrt_of(Rat(1, 2)) == RadExt::sqrt_term(2, Rat(1, 2)));
    CHECK_THROWS(RadExt().inverse());
}

TEST_CASE("partition enumeration") {
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(4, Family::Strict).size() == 2);
    auto odd4 = enumerate_partitions(4, Family::Odd);
    REQUIRE(odd4.size() == 2);
    CHECK(odd4[0] == Partition{1, 1, 1, 1});
    CHECK(odd4[1] == Partition{3, 1});
    for (int n = 1; n <= 30; ++n)
        CHECK(enumerate_partitions(n, Family::Strict).size() ==
              enumerate_partitions(n, Family::Odd).size());
}

TEST_CASE("partition statistics") {
    CHECK(z_of(Partition{1, 1, 1}) == 6);
    CHECK(z_of(Partition{3}) == 3);
    CHECK(z_of(Partition{2, 1}) == 2);
    CHECK(n_of(Partition{4, 3, 1}) == 5);
    CHECK(n_of(Partition{7}) == 0);
    CHECK(n_of(Partition{1, 1, 1, 1}) == 6);
    CHECK(Partition{4, 3, 1}.conjugate() == Partition{3, 2, 2, 1});
}

TEST_CASE("hooks and contents") {
    auto h = hooks(Partition{4, 3, 1}).rows();
    CHECK(h == std::vector<std::vector<int>>{{6, 4, 3, 1}, {4, 2, 1}, {1}});
    CHECK(hooks(Partition{1}).rows() == std::vector<std::vector<int>>{{1}});
    CHECK(contents(Partition{2, 2}).rows() == std::vector<std::vector<int>>{{0, 1}, {-1, 0}});
    // sum of hooks = n(lambda) + n(lambda') + |lambda|
    for (int n = 1; n <= 12; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            int s = 0;
            for (const auto& [rc, v] : hooks(lam).entries) s += v;
            CHECK(s == n_of(lam) + n_of(lam.conjugate()) + n);
        }
}

TEST_CASE("frobenius coordinates") {
    auto [a, b] = frobenius(Partition{5, 4, 3, 1});
    CHECK(a == std::vector<int>{4, 2, 0});
    CHECK(b == std::vector<int>{3, 1, 0});
    CHECK(frobenius(Partition{1}) == std::pair(std::vector<int>{0}, std::vector<int>{0}));
    CHECK(frobenius(Partition{2, 2}) == std::pair(std::vector<int>{1, 0}, std::vector<int>{1, 0}));
    for (int n = 1; n <= 12; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            auto [al, be] = frobenius(lam);
            CHECK(from_frobenius(al, be) == lam);
        }
}

TEST_CASE("double partitions and shifted diagrams") {
    CHECK(double_partition(Partition{4, 3, 1}) == Partition{5, 5, 4, 2});
    CHECK(double_partition(Partition{1}) == Partition{2});
    CHECK(double_partition(Partition{2}) == Partition{3, 1});
    CHECK(shifted_hooks(Partition{4, 3, 1}).rows() ==
          std::vector<std::vector<int>>{{7, 5, 4, 2}, {4, 3, 1}, {1}});
    CHECK(shifted_contents(Partition{4, 3, 1}).rows() ==
          std::vector<std::vector<int>>{{0, 1, 2, 3}, {0, 1, 2}, {0}});
    CHECK(shifted_hooks(Partition{2}).rows() == std::vector<std::vector<int>>{{2, 1}});
    // row multisets of shifted hooks: {1..xi_i} plus {xi_i+xi_k : k>i} minus {xi_i-xi_k : k>i}
    for (int n = 1; n <= 10; ++n)
        for (const auto& xi : enumerate_partitions(n, Family::Strict)) {
            auto rows = shifted_hooks(xi).rows();
            for (int i = 0; i < xi.length(); ++i) {
                std::multiset<int> expect;
                for (int v = 1; v <= xi.parts()[i]; ++v) expect.insert(v);
                for (int k = i + 1; k < xi.length(); ++k) {
                    expect.insert(xi.parts()[i] + xi.parts()[k]);
                    expect.erase(expect.find(xi.parts()[i] - xi.parts()[k]));
                }
                CHECK(std::multiset<int>(rows[i].begin(), rows[i].end()) == expect);
            }
        }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition{1, 1, 1}, Partition{2, 1}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK(!dominance_leq(Partition{3}, Partition{2, 1}));
}

TEST_CASE("signed permutation class types") {
    SignedPerm g;
    g.perm = {2, 3, 4, 1, 6, 7, 5, 9, 8, 10};
    g.signs = {1, 1, 1, -1, 1, 1, 1, -1, 1, -1};
    auto [rp, rm] = class_type(g);
    CHECK(rp == Partition{3});
    CHECK(rm == Partition{4, 2, 1});
    auto [ip, im] = class_type(SignedPerm::identity(3));
    CHECK(ip == Partition{1, 1, 1});
    CHECK(im.empty());
    CHECK(is_split(ip, im));
    // number of even split classes of B_4 equals |OP_4|
    int split_even = 0;
    for (const auto& rho : enumerate_partitions(4))
        if (is_split(rho, Partition{})) ++split_even;
    CHECK(split_even == 2);
}

TEST_CASE("kostka numbers") {
    CHECK(kostka_number(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(kostka_number(Partition{3, 2}, Partition{3, 2}) == 1);
    CHECK(kostka_number(Partition{2}, Partition{1, 1}) == 1);
    CHECK(kostka_number_skew(Partition{2, 1}, Partition{1}, {1, 1}) == 2);
}

TEST_CASE("charge statistic") {
    CHECK(charge({{1, 1, 1}, {2, 2}, {3}}) == 0);  // superstandard tableau
    auto ts = enumerate_ssyt(Partition{2, 1}, {1, 1, 1});
    REQUIRE(ts.size() == 2);
    std::multiset<int> ch{charge(ts[0]), charge(ts[1])};
    CHECK(ch == std::multiset<int>{1, 2});
    // single-row tableau has charge n(mu)
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            auto rows = enumerate_ssyt(Partition{n}, mu.parts());
            REQUIRE(rows.size() == 1);
            CHECK(charge(rows[0]) == n_of(mu));
        }
}

TEST_CASE("marked shifted tableaux") {
    CHECK(marked_shifted_count(Partition{2, 1}, Partition{2, 1}) == 4);
    CHECK(marked_shifted_count(Partition{2, 1}, Partition{1, 1, 1}) == 8);
    CHECK(marked_shifted_count(Partition{1}, Partition{1}) == 2);
    // symmetry under permuting the weight
    for (int n = 1; n <= 6; ++n)
        for (const auto& xi : enumerate_partitions(n, Family::Strict))
            for (const auto& mu : enumerate_partitions(n)) {
                std::vector<int> w = mu.parts();
                std::sort(w.begin(), w.end());
                CHECK(marked_shifted_count(xi, w) == marked_shifted_count(xi, mu.parts()));
            }
}

TEST_CASE("standard shifted tableaux") {
    CHECK(standard_shifted_count(Partition{2, 1}) == 1);
    CHECK(standard_shifted_count(Partition{3, 1}) == 2);
    CHECK(standard_shifted_count(Partition{6}) == 1);
}

TEST_CASE("weight validity") {
    CHECK(is_valid_weight({1, 2, 0, 1, 0}));
    CHECK(!is_valid_weight({0, 0}));
    CHECK(!is_valid_weight({1, 0, 1}));
    CHECK(!is_valid_weight({5, 0}));  // entries must stay below n
}

TEST_CASE("weight to tableau bijection") {
    ShiftedTableau T = weight_to_tableau({1, 2, 0, 1, 0});
    CHECK(T.outer == Partition{3, 2, 1});
    CHECK(T.inner == Partition{1});
    CHECK(T.cells.at({0, 1}) == 1);
    CHECK(T.cells.at({0, 2}) == 2);
    CHECK(T.cells.at({1, 1}) == 3);
    CHECK(T.cells.at({1, 2}) == 4);
    CHECK(T.cells.at({2, 2}) == 5);
    CHECK(tableau_to_weight(T) == std::vector<int>{1, 2, 0, 1, 0});

    ShiftedTableau single = weight_to_tableau({0});
    CHECK(single.cells.at({0, 0}) == 1);

    ShiftedTableau row = weight_to_tableau({0, 1, 2});
    CHECK(row.outer == Partition{3});
    CHECK(row.inner.empty());

    CHECK_THROWS(weight_to_tableau({0, 0}));

    // round trip over all valid weights with small entries
    for (int n = 1; n <= 6; ++n) {
        int total = 1;
        for (int k = 0; k < n; ++k) total *= 4;
        for (int code = 0; code < total; ++code) {
            std::vector<int> w;
            int c = code;
            for (int k = 0; k < n; ++k) { w.push_back(c % 4); c /= 4; }
            if (!is_valid_weight(w)) continue;
            CHECK(tableau_to_weight(weight_to_tableau(w)) == w);
        }
    }
}

TEST_CASE("weights are exactly content vectors") {
    // every valid small weight arises from some standard skew shifted tableau
    for (int n = 1; n <= 5; ++n) {
        std::set<std::vector<int>> from_tableaux;
        for (int outer_n = n; outer_n <= 3 * n; ++outer_n)
            for (const auto& xi : enumerate_partitions(outer_n, Family::Strict))
                for (const auto& nu : enumerate_partitions(outer_n - n, Family::Strict)) {
                    if (!xi.contains(nu)) continue;
                    for (const auto& T : enumerate_standard_shifted(xi, nu)) {
                        auto w = tableau_to_weight(T);
                        if (*std::max_element(w.begin(), w.end()) < n) from_tableaux.insert(w);
                    }
                }
        int total = 1;
        for (int k = 0; k < n; ++k) total *= n;
        for (int code = 0; code < total; ++code) {
            std::vector<int> w;
            int c = code;
            for (int k = 0; k < n; ++k) { w.push_back(c % n); c /= n; }
            CHECK(is_valid_weight(w) == from_tableaux.count(w));
        }
    }
}
