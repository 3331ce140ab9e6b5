#pragma once

#include "spinq/symfunc.hpp"
#include "spinq/tableaux.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace spinq {

/// q_r = sum over odd partitions alpha of r of 2^{l(alpha)}/z_alpha p_alpha.
inline SymF q_r(int r) {
    if (r < 0) return SymF(0, Basis::p);
    if (r == 0) return SymF::one(Basis::p);
    SymF out(r, Basis::p);
    for (const auto& a : enumerate_partitions(r, Family::Odd))
        out.add(a, pow2(a.length()) / Rat(z_of(a)));
    return out;
}

/// q_mu = product of q_{mu_i} over the parts of a composition.
inline SymF q_mu(const std::vector<int>& mu) {
    SymF out = SymF::one(Basis::p);
    for (int r : mu) out = multiply(out, q_r(r));
    return out;
}
inline SymF q_mu(const Partition& mu) { return q_mu(mu.parts()); }

/// Checks q_{2m} = sum_{r=1}^{m-1} (-1)^{r-1} q_r q_{2m-r} - (1/2)(-1)^m q_m^2.
inline bool q_quadratic_check(int m) {
    SymF rhs(2 * m, Basis::p);
    for (int r = 1; r <= m - 1; ++r)
        rhs = rhs + multiply(q_r(r), q_r(2 * m - r)) * Rat(r % 2 == 1 ? 1 : -1);
    rhs = rhs + multiply(q_r(m), q_r(m)) * (Rat(m % 2 == 0 ? -1 : 1) / 2);
    return rhs == q_r(2 * m);
}

/// Q_{(r,s)} = q_r q_s + 2 sum_{i=1}^s (-1)^i q_{r+i} q_{s-i} for r > s,
/// extended by antisymmetry; Q_{(r,0)} = q_r.
inline SymF Q_rs(int r, int s) {
    if (r == s) return SymF(r + s, Basis::p);
    if (r < s) return Q_rs(s, r) * Rat(-1);
    SymF out = multiply(q_r(r), q_r(s));
    for (int i = 1; i <= s; ++i)
        out = out + multiply(q_r(r + i), q_r(s - i)) * Rat(i % 2 == 0 ? 2 : -2);
    return out;
}

/// Schur Q-function by the pfaffian-style recursion; memoized.
inline SymF Q_lambda(const Partition& xi) {
    if (!xi.is_strict()) throw std::invalid_argument("Q requires a strict partition");
    static std::mutex mx;
    static std::map<Partition, SymF> memo;
    {
        std::lock_guard<std::mutex> lk(mx);
        auto it = memo.find(xi);
        if (it != memo.end()) return it->second;
    }
    SymF out;
    int m = xi.length();
    if (m == 0) {
        out = SymF::one(Basis::p);
    } else if (m == 1) {
        out = q_r(xi.parts()[0]);
    } else if (m % 2 == 0) {
        out = SymF(xi.size(), Basis::p);
        for (int j = 2; j <= m; ++j) {
            std::vector<int> rest;
            for (int k = 1; k < m; ++k)
                if (k != j - 1) rest.push_back(xi.parts()[k]);
            SymF term = multiply(Q_rs(xi.parts()[0], xi.parts()[j - 1]), Q_lambda(Partition(rest)));
            out = out + term * Rat(j % 2 == 0 ? 1 : -1);
        }
    } else {
        out = SymF(xi.size(), Basis::p);
        for (int j = 1; j <= m; ++j) {
            std::vector<int> rest;
            for (int k = 0; k < m; ++k)
                if (k != j - 1) rest.push_back(xi.parts()[k]);
            SymF term = multiply(q_r(xi.parts()[j - 1]), Q_lambda(Partition(rest)));
            out = out + term * Rat(j % 2 == 1 ? 1 : -1);
        }
    }
    std::lock_guard<std::mutex> lk(mx);
    return memo.emplace(xi, std::move(out)).first->second;
}

/// Coefficients of Q_xi on the Schur basis; all integers.
inline std::map<Partition, Int> b_coeffs(const Partition& xi) {
    SymF ins = convert(Q_lambda(xi), Basis::s);
    std::map<Partition, Int> out;
    for (const auto& [lam, c] : ins.coeffs) out[lam] = to_int(c);
    return out;
}

/// g = 2^{-l(xi)} b; values must be non-negative integers.
inline std::map<Partition, Int> g_coeffs(const Partition& xi) {
    SymF ins = convert(Q_lambda(xi), Basis::s);
    std::map<Partition, Int> out;
    for (const auto& [lam, c] : ins.coeffs) {
        Rat g = c * pow2(-xi.length());
        Int v = to_int(g);
        if (v < 0) throw std::logic_error("negative Schur coefficient for " + xi.str());
        out[lam] = v;
    }
    return out;
}

/// Solves q_mu = sum_{lambda strict, lambda >= mu} K^_{lambda mu} Q_lambda
/// by elimination along (any refinement of) dominance order.
inline std::map<Partition, Int> qmu_in_Q(const Partition& mu) {
    int n = mu.size();
    SymF rem = q_mu(mu);
    std::map<Partition, Int> out;
    auto strict = enumerate_partitions(n, Family::Strict);
    // visit strict partitions from dominance-largest downward; lexicographic
    // descending refines dominance
    for (auto it = strict.rbegin(); it != strict.rend(); ++it) {
        const Partition& lam = *it;
        SymF Q = Q_lambda(lam);
        // leading q-coefficient of Q_lam on q_lam is 1; peel via the p basis
        // by matching the coefficient of p at the dominance-leading slot.
        // Simpler: express both in the m basis and match m_lam.
        Rat c = convert(rem, Basis::m).coeff(lam) / convert(Q, Basis::m).coeff(lam);
        if (c != 0) {
            rem = rem + Q * (-c);
            Int v = to_int(c);
            out[lam] = v;
            if (!dominance_leq(mu, lam))
                throw std::logic_error("triangularity violated for " + mu.str());
        }
    }
    if (!rem.is_zero()) throw std::logic_error("q_mu not in the span of Q functions");
    return out;
}

/// Degree-n Cauchy identity for Q functions, expanded in 3 + 3 variables:
/// [deg n] prod (1+x_i y_j)/(1-x_i y_j) = sum_xi 2^{-l(xi)} Q_xi(x) Q_xi(y),
/// cross-checked against the power-sum form sum_alpha 2^{l(alpha)}/z_alpha
/// p_alpha(x) p_alpha(y) over odd alpha.
inline bool verify_cauchy_gamma(int n) {
    const int nv = 3, tot = 2 * nv;
    auto lift = [&](const MultiPoly<Rat>& f, int offset) {
        MultiPoly<Rat> out(tot);
        for (const auto& [e, c] : f.terms()) {
            std::vector<int> ee(tot, 0);
            for (size_t i = 0; i < e.size(); ++i) ee[offset + i] = e[i];
            out.add(ee, c);
        }
        return out;
    };
    // product side: expand prod_{i,j} (1+x_i y_j) * (sum_k (x_i y_j)^k) to
    // total degree 2n and keep the bidegree-(n,n) part
    MultiPoly<Rat> prod = MultiPoly<Rat>::constant(tot, 1);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            MultiPoly<Rat> factor(tot);
            for (int k = 0; k <= n; ++k) {
                std::vector<int> e(tot, 0);
                e[i] = k;
                e[nv + j] = k;
                factor.add(e, 1);
                if (k + 1 <= n) {
                    std::vector<int> e2(tot, 0);
                    e2[i] = k + 1;
                    e2[nv + j] = k + 1;
                    factor.add(e2, 1);
                }
            }
            prod = prod * factor;
        }
    MultiPoly<Rat> lhs(tot);
    for (const auto& [e, c] : prod.terms()) {
        int dx = 0, dy = 0;
        for (int i = 0; i < nv; ++i) dx += e[i];
        for (int j = 0; j < nv; ++j) dy += e[nv + j];
        if (dx == n && dy == n) lhs.add(e, c);
    }
    MultiPoly<Rat> rhs(tot);
    for (const auto& xi : enumerate_partitions(n, Family::Strict))
        rhs = rhs + lift(expand(Q_lambda(xi), nv), 0) * lift(expand(Q_lambda(xi), nv), nv) *
                        pow2(-xi.length());
    MultiPoly<Rat> pp(tot);
    for (const auto& a : enumerate_partitions(n, Family::Odd))
        pp = pp + lift(expand(SymF::single(Basis::p, a), nv), 0) *
                      lift(expand(SymF::single(Basis::p, a), nv), nv) *
                      (pow2(a.length()) / Rat(z_of(a)));
    return lhs == rhs && lhs == pp;
}

}  // namespace spinq
