#pragma once

#include "spinq/multipoly.hpp"
#include "spinq/partition.hpp"
#include "spinq/tableaux.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace spinq {

enum class Basis { m, h, e, p, s };

inline std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::h: return "h";
        case Basis::e: return "e";
        case Basis::p: return "p";
        case Basis::s: return "s";
    }
    return "?";
}
inline Basis basis_parse(const std::string& s) {
    if (s == "m") return Basis::m;
    if (s == "h") return Basis::h;
    if (s == "e") return Basis::e;
    if (s == "p") return Basis::p;
    if (s == "s") return Basis::s;
    throw std::invalid_argument("unknown basis: " + s);
}

// Homogeneous symmetric function of fixed degree expressed in one basis.
template <class C>
struct BasicSymF {
    int degree = 0;
    Basis basis = Basis::m;
    std::map<Partition, C> coeffs;

    BasicSymF() = default;
    BasicSymF(int deg, Basis b) : degree(deg), basis(b) {}

    static BasicSymF one(Basis b = Basis::m) {
        BasicSymF f(0, b);
        f.coeffs[Partition{}] = C(1);
        return f;
    }
    static BasicSymF single(Basis b, const Partition& lam, const C& c = C(1)) {
        BasicSymF f(lam.size(), b);
        if (!(c == C(0))) f.coeffs[lam] = c;
        return f;
    }

    bool is_zero() const { return coeffs.empty(); }
    C coeff(const Partition& lam) const {
        auto it = coeffs.find(lam);
        return it == coeffs.end() ? C(0) : it->second;
    }
    void add(const Partition& lam, const C& c) {
        if (c == C(0)) return;
        auto it = coeffs.find(lam);
        if (it == coeffs.end()) coeffs.emplace(lam, c);
        else {
            it->second = it->second + c;
            if (it->second == C(0)) coeffs.erase(it);
        }
    }

    friend BasicSymF operator+(const BasicSymF& a, const BasicSymF& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree != b.degree || a.basis != b.basis)
            throw std::invalid_argument("degree/basis mismatch in sum");
        BasicSymF r = a;
        for (const auto& [lam, c] : b.coeffs) r.add(lam, c);
        return r;
    }
    friend BasicSymF operator-(const BasicSymF& a, const BasicSymF& b) {
        return a + b * C(-1);
    }
    friend BasicSymF operator*(const BasicSymF& a, const C& c) {
        BasicSymF r(a.degree, a.basis);
        for (const auto& [lam, cc] : a.coeffs) r.add(lam, cc * c);
        return r;
    }
    friend bool operator==(const BasicSymF& a, const BasicSymF& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree == b.degree && a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

using SymF = BasicSymF<Rat>;

namespace detail {

/// Number of distinct rearrangements beta of mu (zero-padded to len(rho)) such
/// that the complement rho - beta is a valid monomial of h_r / e_r / p_r.
enum class MultKind { h, e, p };

inline Int rearrangement_count(const Partition& mu, const Partition& rho, int r, MultKind kind) {
    int len = rho.length();
    if (mu.length() > len) return 0;
    std::vector<int> beta(mu.parts().begin(), mu.parts().end());
    beta.resize(len, 0);
    std::sort(beta.begin(), beta.end());
    Int count = 0;
    do {
        bool ok = true;
        int support = 0;
        for (int i = 0; i < len && ok; ++i) {
            int d = rho.parts()[i] - beta[i];
            if (d < 0) ok = false;
            else if (kind == MultKind::e && d > 1) ok = false;
            else if (kind == MultKind::p && d > 0) {
                if (d != r || support) ok = false;
                ++support;
            }
        }
        if (ok && kind == MultKind::p && support != 1) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(beta.begin(), beta.end()));
    return count;
}

/// Multiplies an m-basis expansion by h_r / e_r / p_r, staying in the m basis.
inline std::map<Partition, Rat> mult_m(const std::map<Partition, Rat>& f, int deg, int r,
                                       MultKind kind) {
    std::map<Partition, Rat> out;
    auto rhos = enumerate_partitions(deg + r);
    for (const auto& [mu, c] : f)
        for (const auto& rho : rhos) {
            Int k = rearrangement_count(mu, rho, r, kind);
            if (k != 0) {
                Rat& slot = out[rho];
                slot += c * Rat(k);
            }
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

struct DegreeTables {
    std::vector<Partition> parts;               // partitions of d, sorted
    std::map<Partition, int> index;
    // to_m[basis][i][j]: coefficient of m_{parts[j]} in basis_{parts[i]}
    std::map<Basis, std::vector<std::vector<Rat>>> to_m, from_m;
};

inline std::vector<std::vector<Rat>> invert_matrix(std::vector<std::vector<Rat>> a) {
    int n = (int)a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) { piv = row; break; }
        if (piv < 0) throw std::domain_error("transition matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = a[col][col];
        for (int j = 0; j < n; ++j) { a[col][j] /= p; inv[col][j] /= p; }
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col];
            for (int j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline const DegreeTables& degree_tables(int d) {
    static std::mutex mx;
    static std::map<int, DegreeTables> cache;
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    DegreeTables t;
    t.parts = enumerate_partitions(d);
    for (int i = 0; i < (int)t.parts.size(); ++i) t.index[t.parts[i]] = i;
    int n = (int)t.parts.size();

    for (Basis b : {Basis::h, Basis::e, Basis::p}) {
        MultKind kind = b == Basis::h ? MultKind::h : b == Basis::e ? MultKind::e : MultKind::p;
        std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n, 0));
        for (int i = 0; i < n; ++i) {
            std::map<Partition, Rat> cur{{Partition{}, Rat(1)}};
            int deg = 0;
            for (int part : t.parts[i].parts()) {
                cur = mult_m(cur, deg, part, kind);
                deg += part;
            }
            for (const auto& [mu, c] : cur) mat[i][t.index.at(mu)] = c;
        }
        t.from_m[b] = invert_matrix(mat);
        t.to_m[b] = std::move(mat);
    }
    {
        std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                mat[i][j] = Rat(kostka_number(t.parts[i], t.parts[j]));
        t.from_m[Basis::s] = invert_matrix(mat);
        t.to_m[Basis::s] = std::move(mat);
    }
    return cache.emplace(d, std::move(t)).first->second;
}

}  // namespace detail

template <class C>
BasicSymF<C> convert(const BasicSymF<C>& f, Basis to) {
    if (f.basis == to || f.is_zero() || f.degree == 0) {
        BasicSymF<C> r = f;
        r.basis = to;
        return r;
    }
    const auto& t = detail::degree_tables(f.degree);
    BasicSymF<C> viam(f.degree, Basis::m);
    if (f.basis == Basis::m) {
        viam = f;
    } else {
        const auto& mat = t.to_m.at(f.basis);
        for (const auto& [lam, c] : f.coeffs) {
            const auto& row = mat[t.index.at(lam)];
            for (int j = 0; j < (int)row.size(); ++j)
                if (row[j] != 0) viam.add(t.parts[j], c * row[j]);
        }
    }
    if (to == Basis::m) return viam;
    // m-basis vector times the inverse transition matrix
    const auto& inv = t.from_m.at(to);
    BasicSymF<C> out(f.degree, to);
    for (const auto& [mu, c] : viam.coeffs) {
        int j = t.index.at(mu);
        for (int i = 0; i < (int)inv.size(); ++i) {
            // column j of to_m^{-1} read row-wise: m_mu = sum_i inv[j][i] b_i
            if (inv[j][i] != 0) out.add(t.parts[i], c * inv[j][i]);
        }
    }
    return out;
}

/// Product computed in the power-sum basis, returned in the basis of `a`.
template <class C>
BasicSymF<C> multiply(const BasicSymF<C>& a, const BasicSymF<C>& b) {
    if (a.is_zero() || b.is_zero()) return BasicSymF<C>(a.degree + b.degree, a.basis);
    BasicSymF<C> pa = convert(a, Basis::p), pb = convert(b, Basis::p);
    BasicSymF<C> r(a.degree + b.degree, Basis::p);
    for (const auto& [lam, ca] : pa.coeffs)
        for (const auto& [mu, cb] : pb.coeffs) {
            std::vector<int> parts = lam.parts();
            parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
            r.add(Partition::sorted(std::move(parts)), ca * cb);
        }
    return convert(r, a.basis);
}

template <class C>
C inner_product(const BasicSymF<C>& f, const BasicSymF<C>& g) {
    if (!f.is_zero() && !g.is_zero() && f.degree != g.degree)
        throw std::invalid_argument("inner product of unequal degrees");
    BasicSymF<C> pf = convert(f, Basis::p), pg = convert(g, Basis::p);
    C total(0);
    for (const auto& [lam, c] : pf.coeffs) total = total + c * pg.coeff(lam) * Rat(z_of(lam));
    return total;
}

template <class C>
C inner_product_gamma(const BasicSymF<C>& f, const BasicSymF<C>& g) {
    if (!f.is_zero() && !g.is_zero() && f.degree != g.degree)
        throw std::invalid_argument("inner product of unequal degrees");
    BasicSymF<C> pf = convert(f, Basis::p), pg = convert(g, Basis::p);
    C total(0);
    for (const auto& [lam, c] : pf.coeffs) {
        if (!lam.is_odd_parts())
            throw std::invalid_argument("form requires odd power-sum support");
        total = total + c * pg.coeff(lam) * (Rat(z_of(lam)) * pow2(-lam.length()));
    }
    for (const auto& [lam, c] : pg.coeffs)
        if (!lam.is_odd_parts())
            throw std::invalid_argument("form requires odd power-sum support");
    return total;
}

/// p_r -> 2 p_r for odd r, 0 for even r; result in the p basis.
template <class C>
BasicSymF<C> phi_map(const BasicSymF<C>& f) {
    BasicSymF<C> pf = convert(f, Basis::p);
    BasicSymF<C> out(f.degree, Basis::p);
    for (const auto& [lam, c] : pf.coeffs) {
        if (!lam.is_odd_parts()) continue;
        out.add(lam, c * pow2(lam.length()));
    }
    return out;
}

template <class C>
MultiPoly<C> expand(const BasicSymF<C>& f, int nvars) {
    BasicSymF<C> fm = convert(f, Basis::m);
    MultiPoly<C> out(nvars);
    for (const auto& [lam, c] : fm.coeffs) {
        MultiPoly<C> m = monomial_sym<C>(lam, nvars);
        out = out + m * c;
    }
    return out;
}

/// Skew Schur function in the m basis via skew semistandard tableau counts.
inline SymF skew_schur(const Partition& outer, const Partition& inner) {
    int d = outer.size() - inner.size();
    SymF out(d, Basis::m);
    for (const auto& mu : enumerate_partitions(d))
        out.add(mu, Rat(kostka_number_skew(outer, inner, mu.parts())));
    return out;
}

// Hook Schur function as a list of (rho, skew factor): sum of s_rho(x) times
// the m-basis expansion of the conjugate-skew factor in y.
struct HookSchurTerm {
    Partition rho;
    SymF yfactor;  // m basis
};

inline std::vector<HookSchurTerm> hook_schur(const Partition& lam) {
    std::vector<HookSchurTerm> out;
    Partition lamc = lam.conjugate();
    for (int d = 0; d <= lam.size(); ++d)
        for (const auto& rho : enumerate_partitions(d)) {
            if (!lam.contains(rho)) continue;
            SymF yf = skew_schur(lamc, rho.conjugate());
            if (d == lam.size()) {
                // empty skew shape: constant 1
                yf = SymF::one();
            }
            if (yf.is_zero()) continue;
            out.push_back({rho, yf});
        }
    return out;
}

/// det(q_{lambda_i - i + j}) over a supply of ring elements q_r in the p basis
/// (q_0 = 1, q_r = 0 for r < 0).
template <class C, class Supply>
BasicSymF<C> s_det(const Partition& lam, Supply&& q_of) {
    int l = lam.length();
    if (l == 0) return BasicSymF<C>::one(Basis::p);
    std::vector<int> perm(l);
    for (int i = 0; i < l; ++i) perm[i] = i;
    BasicSymF<C> total(lam.size(), Basis::p);
    do {
        int sign = 1;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        BasicSymF<C> term = BasicSymF<C>::one(Basis::p);
        bool zero = false;
        for (int i = 0; i < l && !zero; ++i) {
            int r = lam.parts()[i] - i - 1 + perm[i] + 1;
            if (r < 0) { zero = true; break; }
            if (r == 0) continue;
            term = multiply(term, q_of(r));
        }
        if (!zero) total = total + term * Rat(sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace spinq
