#pragma once

#include "spinq/multipoly.hpp"
#include "spinq/poly.hpp"
#include "spinq/report.hpp"
#include "spinq/schurq.hpp"
#include "spinq/symfunc.hpp"
#include "spinq/tableaux.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinq {

/// Kostka polynomial as a charge generating function over SSYT.
inline Poly kostka_poly(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw std::invalid_argument("sizes differ");
    Poly out;
    for (const auto& T : enumerate_ssyt(lam, mu.parts())) out += Poly::t(charge(T));
    return out;
}

/// v_mu(t) = prod over multiplicities m (including the zero parts among
/// n_vars) of prod_{j=1}^{m} (1-t^j)/(1-t).
inline Poly hl_norm(const Partition& mu, int nvars) {
    auto tfac = [](int m) {
        Poly f(1);
        for (int j = 1; j <= m; ++j) {
            // (1-t^j)/(1-t) = 1 + t + ... + t^{j-1}
            Poly g;
            for (int k = 0; k < j; ++k) g += Poly::t(k);
            f = f * g;
        }
        return f;
    };
    Poly v = tfac(nvars - mu.length());
    int i = 0;
    while (i < mu.length()) {
        int j = i;
        while (j < mu.length() && mu.parts()[j] == mu.parts()[i]) ++j;
        v = v * tfac(j - i);
        i = j;
    }
    return v;
}

/// Hall-Littlewood polynomial P_mu(x_1..x_n; t) by exact symmetrization.
inline MultiPoly<Poly> hall_littlewood_P(const Partition& mu, int nvars) {
    if (nvars < mu.length()) throw std::invalid_argument("too few variables");
    if (nvars > 7) throw std::invalid_argument("symmetrization limited to 7 variables");
    // sum over w of sgn(w) w(x^mu prod_{i<j}(x_i - t x_j)), then exact
    // division by the Vandermonde determinant and by v_mu(t)
    MultiPoly<Poly> base(nvars);
    {
        std::vector<int> e(nvars, 0);
        for (int i = 0; i < mu.length(); ++i) e[i] = mu.parts()[i];
        base.add(e, Poly(1));
    }
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            MultiPoly<Poly> f = MultiPoly<Poly>::var(nvars, i);
            MultiPoly<Poly> tx = MultiPoly<Poly>::var(nvars, j) * Poly::t(1);
            base = base * (f - tx);
        }
    MultiPoly<Poly> num(nvars);
    std::vector<int> perm(nvars);
    for (int i = 0; i < nvars; ++i) perm[i] = i;
    do {
        int sign = 1;
        for (int i = 0; i < nvars; ++i)
            for (int j = i + 1; j < nvars; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        MultiPoly<Poly> term = base.permuted(perm);
        num = sign > 0 ? num + term : num - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j)
            num = num.divexact_linear(i, j, Poly(1));
    Poly v = hl_norm(mu, nvars);
    MultiPoly<Poly> out(nvars);
    for (const auto& [e, c] : num.terms()) out.add(e, poly_divexact_t(c, v));
    return out;
}

/// Kostka polynomials of a fixed shape from the symmetrization route:
/// expand s_lambda over the P_mu basis by a triangular solve.
inline std::map<Partition, Poly> kostka_poly_oracle(const Partition& lam, int nvars) {
    MultiPoly<Rat> slam = expand(SymF::single(Basis::s, lam), nvars);
    MultiPoly<Poly> rem(nvars);
    for (const auto& [e, c] : slam.terms()) rem.add(e, Poly(c));
    std::map<Partition, Poly> out;
    auto parts = enumerate_partitions(lam.size());
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (it->length() > nvars) continue;
        std::vector<int> e(it->parts().begin(), it->parts().end());
        e.resize(nvars, 0);
        Poly c = rem.coeff(e);
        if (c.is_zero()) continue;
        MultiPoly<Poly> P = hall_littlewood_P(*it, nvars);
        MultiPoly<Poly> cP(nvars);
        for (const auto& [ee, cc] : P.terms()) cP.add(ee, cc * c);
        rem = rem - cP;
        out[*it] = c;
    }
    if (!rem.is_zero()) throw std::logic_error("triangular solve left a nonzero remainder");
    return out;
}

/// K^-_{xi mu}(t) = sum_lambda b_{xi lambda} K_{lambda mu}(t).
inline Poly spin_kostka(const Partition& xi, const Partition& mu) {
    if (!xi.is_strict()) throw std::invalid_argument("shape must be strict");
    if (xi.size() != mu.size()) throw std::invalid_argument("sizes differ");
    Poly out;
    for (const auto& [lam, b] : b_coeffs(xi)) out += kostka_poly(lam, mu) * Rat(b);
    return out;
}

/// Checks the standard property list of spin Kostka polynomials for all
/// strict xi and all mu of size n.
inline PropertyReport spin_kostka_property_suite(int n) {
    PropertyReport rep;
    auto mus = enumerate_partitions(n);
    for (const auto& xi : enumerate_partitions(n, Family::Strict)) {
        int l = xi.length();
        for (const auto& mu : mus) {
            Poly k = spin_kostka(xi, mu);
            std::string tag = "xi=" + xi.str() + " mu=" + mu.str();
            if (!dominance_leq(mu, xi)) {
                if (!k.is_zero()) rep.fail(tag + ": nonzero without dominance");
                continue;
            }
            if (!k.is_zero() && k.degree_t() != n_of(mu) - n_of(xi))
                rep.fail(tag + ": degree != n(mu)-n(xi)");
            for (const auto& [key, c] : k.terms()) {
                Rat v = c * pow2(-l);
                if (!is_integer(v) || v < 0) {
                    rep.fail(tag + ": 2^{-l} K^- not in Z_+[t]");
                    break;
                }
            }
            if (k.eval(1) != Rat(marked_shifted_count(xi, mu)))
                rep.fail(tag + ": K^-(1) != tableau count");
            if (k.eval(-1) != (xi == mu ? pow2(l) : Rat(0)))
                rep.fail(tag + ": K^-(-1) != 2^l delta");
            if (xi == mu && k != Poly(pow2(l))) rep.fail(tag + ": K^-_{xi xi} != 2^l");
        }
        // closed product formula at mu = (1^n)
        Poly lhs = spin_kostka(xi, Partition(std::vector<int>(n, 1)));
        Poly num = Poly::t(n_of(xi));
        for (int j = 1; j <= n; ++j) num = num * (Poly(1) - Poly::t(j));
        for (const auto& [rc, c] : shifted_contents(xi).entries)
            num = num * (Poly(1) + Poly::t(c));
        Poly den(1);
        for (const auto& [rc, h] : shifted_hooks(xi).entries)
            den = den * (Poly(1) - Poly::t(h));
        if (lhs * den != num) rep.fail("xi=" + xi.str() + ": column closed form");
    }
    return rep;
}

/// Coefficient of x^mu in prod_{i<j} (1-x_j/x_i)/(1-t x_j/x_i) s_lambda(x),
/// computed with the t-adic expansion truncated above n(mu)+1.
inline Poly q_weight_multiplicity(const Partition& lam, const Partition& mu, int nvars) {
    if (lam.length() > nvars || mu.length() > nvars)
        throw std::invalid_argument("too few variables");
    if (nvars > 4) throw std::invalid_argument("q-weight multiplicity limited to 4 variables");
    int tmax = n_of(mu) + 1;
    MultiPoly<Rat> slam = expand(SymF::single(Basis::s, lam), nvars);
    MultiPoly<Poly> f(nvars);
    for (const auto& [e, c] : slam.terms()) f.add(e, Poly(c));
    auto truncate_t = [&](const MultiPoly<Poly>& g) {
        MultiPoly<Poly> out(nvars);
        for (const auto& [e, c] : g.terms()) out.add(e, c.truncated(tmax));
        return out;
    };
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            // (1 - r) * (1 + tr + t^2 r^2 + ...) with r = x_j / x_i
            MultiPoly<Poly> factor(nvars);
            for (int k = 0; k <= tmax; ++k) {
                std::vector<int> e(nvars, 0);
                e[i] = -k;
                e[j] = k;
                factor.add(e, Poly::t(k));
                e[i] = -(k + 1);
                e[j] = k + 1;
                factor.add(e, -Poly::t(k));
            }
            f = truncate_t(f * factor);
        }
    std::vector<int> e(mu.parts().begin(), mu.parts().end());
    e.resize(nvars, 0);
    Poly out = f.coeff(e);
    if (out.degree_t() > n_of(mu))
        throw std::logic_error("q-weight multiplicity is not polynomial of expected degree");
    return out;
}

/// C(t) = t^{n(mu)} K(t^{-1}).
inline Poly c_from_k(const Partition& lam, const Partition& mu) {
    return kostka_poly(lam, mu).reverse_t(n_of(mu));
}

/// C^-(t) = 2^{-(l(xi)-delta(xi))/2} t^{n(mu)} K^-(t^{-1}); the 2-power must
/// clear and the coefficients must be non-negative integers.
inline Poly c_minus_from_spin_k(const Partition& xi, const Partition& mu) {
    Poly c = spin_kostka(xi, mu).reverse_t(n_of(mu)) *
             pow2(-(xi.length() - xi.delta()) / 2);
    for (const auto& [key, v] : c.terms())
        if (!is_integer(v) || v < 0)
            throw std::logic_error("graded multiplicity has a bad coefficient");
    return c;
}

}  // namespace spinq
