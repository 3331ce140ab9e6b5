#pragma once

#include "spinq/partition.hpp"
#include "spinq/poly.hpp"
#include "spinq/schurq.hpp"
#include "spinq/symfunc.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace spinq {

/// m_lambda evaluated at x_i = t^{i-1}, i = 1..nvars (exact polynomial).
inline Poly principal_monomial_sym(const Partition& lam, int nvars) {
    if (lam.length() > nvars) return Poly();
    std::vector<int> beta(lam.parts().begin(), lam.parts().end());
    beta.resize(nvars, 0);
    std::sort(beta.begin(), beta.end());
    Poly out;
    do {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += beta[i] * i;
        out += Poly::t(d);
    } while (std::next_permutation(beta.begin(), beta.end()));
    return out;
}

/// f evaluated at x_i = t^{i-1}, truncated beyond t^order.  With
/// nvars >= order + 1 variables the low-order coefficients are exact, since
/// any monomial touching x_i with i > order has degree > order.
inline Poly principal_series(const SymF& f, int order, int nvars = -1) {
    if (nvars < 0) nvars = order + 1;
    SymF fm = convert(f, Basis::m);
    Poly out;
    for (const auto& [lam, c] : fm.coeffs) out += principal_monomial_sym(lam, nvars) * c;
    return out.truncated(order);
}

/// t-adic expansion of a rational function whose numerator may involve s.
inline Poly ratfun_series(const RatFun& f, int ord_t) {
    Rat d0 = f.den().constant_term();
    if (d0 == 0) throw std::domain_error("ratfun_series: denominator vanishes at t = 0");
    std::vector<Rat> inv(static_cast<size_t>(ord_t) + 1, Rat(0));
    inv[0] = Rat(1) / d0;
    for (int k = 1; k <= ord_t; ++k) {
        Rat acc = 0;
        for (int j = 1; j <= k; ++j) acc += f.den().coeff(j) * inv[static_cast<size_t>(k - j)];
        inv[static_cast<size_t>(k)] = -acc / d0;
    }
    Poly out;
    for (const auto& [key, c] : f.num().terms())
        for (int k = 0; key[0] + k <= ord_t; ++k)
            out.add_term(key[0] + k, key[1], c * inv[static_cast<size_t>(k)]);
    return out;
}

/// s_lambda(1, t, t^2, ...) = t^{n(lambda)} / prod (1 - t^{h_ij}).
inline RatFun principal_schur(const Partition& lam) {
    Poly den(1);
    for (const auto& [rc, h] : hooks(lam).entries) den *= Poly(1) - Poly::t(h);
    return RatFun(Poly::t(n_of(lam)), den);
}

/// Hook Schur specialization hs_lambda(t^bullet; (b/a)-weighted second
/// alphabet): prod over cells (a t^{i-1} + b t^{j-1}) / prod (1 - t^{h_ij}).
/// Equals t^{n(lambda)} prod (a + b t^{c_ij}) / prod (1 - t^{h_ij}); with
/// b = s the result is a polynomial in s over Q(t).
inline RatFun hs_spec(const Partition& lam, const Poly& a, const Poly& b) {
    Poly num(1), den(1);
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts()[i]; ++j)
            num *= a * Poly::t(i) + b * Poly::t(j);
    for (const auto& [rc, h] : hooks(lam).entries) den *= Poly(1) - Poly::t(h);
    return RatFun(num, den);
}
inline RatFun hs_spec(const Partition& lam, const Rat& a, const Rat& b) {
    return hs_spec(lam, Poly(a), Poly(b));
}

/// Q_xi(1, t, t^2, ...) = t^{n(xi)} prod (1 + t^{c_ij}) / prod (1 - t^{h*_ij})
/// over the shifted diagram.
inline RatFun principal_Q(const Partition& xi) {
    if (!xi.is_strict()) throw std::invalid_argument("principal_Q requires a strict partition");
    Poly num = Poly::t(n_of(xi));
    for (const auto& [rc, c] : shifted_contents(xi).entries) num *= Poly(1) + Poly::t(c);
    Poly den(1);
    for (const auto& [rc, h] : shifted_hooks(xi).entries) den *= Poly(1) - Poly::t(h);
    return RatFun(num, den);
}

struct FakeDegree {
    RatFun full;  // f_lambda: graded multiplicity in the full polynomial ring
    Poly coinv;   // f^lambda: graded multiplicity in the coinvariant algebra
};

/// f_lambda = s_lambda(t^bullet); f^lambda = f_lambda prod_{r=1}^n (1 - t^r),
/// which must reduce to a polynomial.
inline FakeDegree fake_degree(const Partition& lam) {
    RatFun f = principal_schur(lam);
    RatFun g = f;
    for (int r = 1; r <= lam.size(); ++r) g *= RatFun(Poly(1) - Poly::t(r));
    return {f, g.as_polynomial()};
}

/// Bi-graded multiplicity of S^lambda in S(V) (x) Wedge(V):
/// prod (t^{i-1} + s t^{j-1}) / prod (1 - t^{h_ij}), polynomial in s over Q(t).
inline RatFun kp_bigraded(const Partition& lam) { return hs_spec(lam, Poly(1), Poly::s(1)); }

/// Evaluates f through its power-sum expansion, substituting p_of(r) for p_r
/// and truncating at (ord_t, ord_s) after every multiplication.
inline Poly eval_p_series(const SymF& f, const std::function<Poly(int)>& p_of, int ord_t,
                          int ord_s) {
    SymF fp = convert(f, Basis::p);
    Poly out;
    for (const auto& [alpha, c] : fp.coeffs) {
        Poly term(1);
        for (int r : alpha.parts()) term = (term * p_of(r)).truncated(ord_t, ord_s);
        out += term * c;
    }
    return out.truncated(ord_t, ord_s);
}

namespace detail {

/// 1/(1 - t^r) truncated: 1 + t^r + t^{2r} + ...
inline Poly geometric_t(int r, int ord) {
    Poly g;
    for (int k = 0; k * r <= ord; ++k) g += Poly::t(k * r);
    return g;
}
inline Poly geometric_s(int r, int ord) {
    Poly g;
    for (int k = 0; k * r <= ord; ++k) g += Poly::s(k * r);
    return g;
}

}  // namespace detail

/// s_lambda on the doubly indexed alphabet {t^j s^k : j, k >= 0}, truncated;
/// p_r |-> 1/((1 - t^r)(1 - s^r)).  No closed form is known.
inline Poly grsv2(const Partition& lam, int order_t, int order_s) {
    auto p_of = [&](int r) { return detail::geometric_t(r, order_t) * detail::geometric_s(r, order_s); };
    return eval_p_series(SymF::single(Basis::s, lam), p_of, order_t, order_s);
}

struct SpinGraded {
    RatFun d;     // d_xi: graded multiplicity in Cl (x) S(V)
    Poly coinv;   // d^xi: multiplicity in Cl (x) coinvariants, a polynomial
    Poly dhat;    // d_xi(t,s) on {t^j} u {s t^j}, truncated series
    Poly dtilde;  // d_xi(t,s) on {t^j s^k}, truncated series
    int order_t = 0;
    int order_s = 0;
};

/// All graded multiplicities attached to the irreducible D^xi:
/// d = 2^{-(l - delta)/2} Q_xi(t^bullet), the coinvariant variant clears the
/// denominator with prod (1 - t^r), and the two-parameter variants evaluate
/// Q_xi on the doubled alphabets by truncation (p_r |-> (1 + s^r)/(1 - t^r)
/// and p_r |-> 1/((1 - t^r)(1 - s^r)) respectively).
inline SpinGraded spin_graded(const Partition& xi, int order_t = 12, int order_s = 12) {
    if (!xi.is_strict()) throw std::invalid_argument("spin_graded requires a strict partition");
    Rat pref = pow2(-(xi.length() - xi.delta()) / 2);
    SpinGraded out;
    out.order_t = order_t;
    out.order_s = order_s;
    out.d = principal_Q(xi) * RatFun(pref);
    RatFun g = out.d;
    for (int r = 1; r <= xi.size(); ++r) g *= RatFun(Poly(1) - Poly::t(r));
    out.coinv = g.as_polynomial();
    SymF Q = Q_lambda(xi);
    auto p_hat = [&](int r) {
        return (Poly(1) + Poly::s(r)) * detail::geometric_t(r, order_t);
    };
    auto p_tilde = [&](int r) {
        return detail::geometric_t(r, order_t) * detail::geometric_s(r, order_s);
    };
    out.dhat = eval_p_series(Q, p_hat, order_t, order_s) * pref;
    out.dtilde = eval_p_series(Q, p_tilde, order_t, order_s) * pref;
    return out;
}

}  // namespace spinq
