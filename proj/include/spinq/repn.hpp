#pragma once

#include "spinq/repmatrix.hpp"
#include "spinq/report.hpp"
#include "spinq/schurq.hpp"
#include "spinq/tableaux.hpp"

#include <bit>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinq {

// ---------------------------------------------------------------------------
// Clifford monomials

/// sign * c_{i1} c_{i2} ... with sorted support; c_i^2 = 1, c_i c_j = -c_j c_i.
struct CliffMono {
    int n = 0;
    int sign = 1;
    std::vector<int> support;  // sorted, 1-based

    std::string str() const {
        std::string s = sign < 0 ? "-" : "+";
        if (support.empty()) return s + "1";
        for (int i : support) s += "c" + std::to_string(i);
        return s;
    }
};

inline CliffMono cliff_mul(const CliffMono& a, const CliffMono& b) {
    if (a.n != b.n) throw std::invalid_argument("clifford ranks differ");
    CliffMono r{a.n, a.sign * b.sign, a.support};
    for (int i : b.support) {
        // move c_i leftward past the tail of r.support into sorted position
        int pos = (int)r.support.size();
        while (pos > 0 && r.support[pos - 1] > i) {
            --pos;
            r.sign = -r.sign;
        }
        if (pos > 0 && r.support[pos - 1] == i) {
            r.support.erase(r.support.begin() + (pos - 1));  // c_i^2 = 1
        } else {
            r.support.insert(r.support.begin() + pos, i);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Representations

struct Rep {
    int n = 0;
    int dim = 0;
    std::string label;
    std::map<std::string, RMatrix> gens;
    std::vector<int> parity;  // basis index -> Z_2 degree

    bool has(const std::string& name) const { return gens.count(name) != 0; }
    const RMatrix& gen(const std::string& name) const {
        auto it = gens.find(name);
        if (it == gens.end()) throw std::out_of_range("missing generator " + name);
        return it->second;
    }
    const RMatrix& s(int k) const { return gen("s" + std::to_string(k)); }
    const RMatrix& c(int i) const { return gen("c" + std::to_string(i)); }
    const RMatrix& x(int i) const { return gen("x" + std::to_string(i)); }
};

inline int max_module_dim() {
    const char* e = std::getenv("SPINQ_MAX_DIM");
    return e != nullptr ? std::atoi(e) : 4096;
}

/// q(i) = i(i+1); the x-eigenvalues are the square roots of these.
inline Rat q_val(int i) { return Rat(i) * Rat(i + 1); }

namespace detail {

/// Left multiplication by c_i on the monomial basis c^beta (beta as a bit
/// mask, bit i-1 for c_i): returns {sign, new mask}.
inline std::pair<int, unsigned> cliff_left(int i, unsigned mask) {
    unsigned below = mask & ((1u << (i - 1)) - 1);
    int sign = std::popcount(below) % 2 == 0 ? 1 : -1;
    return {sign, mask ^ (1u << (i - 1))};
}

/// Right multiplication c^mask * c_i: the sign counts the factors above i.
inline std::pair<int, unsigned> cliff_right(int i, unsigned mask) {
    unsigned above = mask >> i;
    int sign = std::popcount(above) % 2 == 0 ? 1 : -1;
    return {sign, mask ^ (1u << (i - 1))};
}

}  // namespace detail

/// The Clifford algebra as a module over itself: dimension 2^n, c_i by left
/// multiplication, the symmetric group by permutation of indices.
inline Rep basic_spin_module(int n) {
    Rep r;
    r.n = n;
    r.dim = 1 << n;
    r.label = "basic spin, n=" + std::to_string(n);
    if (r.dim > max_module_dim()) throw std::length_error("module dimension exceeds SPINQ_MAX_DIM");
    r.parity.resize(r.dim);
    for (unsigned m = 0; m < (unsigned)r.dim; ++m) r.parity[m] = std::popcount(m) % 2;
    for (int i = 1; i <= n; ++i) {
        RMatrix ci(r.dim);
        for (unsigned m = 0; m < (unsigned)r.dim; ++m) {
            auto [sg, to] = detail::cliff_left(i, m);
            ci.at(to, m) = RadExt(Rat(sg));
        }
        r.gens["c" + std::to_string(i)] = ci;
    }
    for (int k = 1; k < n; ++k) {
        RMatrix sk(r.dim);
        unsigned lo = 1u << (k - 1), hi = 1u << k;
        for (unsigned m = 0; m < (unsigned)r.dim; ++m) {
            bool bl = m & lo, bh = m & hi;
            unsigned to = m;
            int sg = 1;
            if (bl != bh) to = (m ^ lo) ^ hi;
            if (bl && bh) sg = -1;  // s_k(c_k c_{k+1}) = c_{k+1} c_k s_k
            sk.at(to, m) = RadExt(Rat(sg));
        }
        r.gens["s" + std::to_string(k)] = sk;
    }
    return r;
}

namespace detail {

/// Swapping the adjacent labels k, k+1 keeps a standard tableau standard
/// unless the two cells share a row or a column.
inline bool swap_standard(const ShiftedTableau& T, int k) {
    auto a = T.cell_of(k);
    auto b = T.cell_of(k + 1);
    return a.first != b.first && a.second != b.second;
}

}  // namespace detail

/// Seminormal module on the full space Cl_n (x) span{v_T : T standard of
/// shape outer/inner}.  x_i acts by (+/-) sqrt(q(c(T_i))), s_k by the
/// seminormal coefficients plus the c_k c_{k+1} correction; for inner = {}
/// the x-generators coincide with the Jucys-Murphy images.
inline Rep seminormal_module(const Partition& outer, const Partition& inner = {}) {
    auto tabs = enumerate_standard_shifted(outer, inner);
    int n = outer.size() - inner.size();
    Rep r;
    r.n = n;
    r.dim = (int)tabs.size() << n;
    r.label = outer.str() + (inner.empty() ? "" : "/" + inner.str());
    if (r.dim > max_module_dim()) throw std::length_error("module dimension exceeds SPINQ_MAX_DIM");
    unsigned nm = 1u << n;
    auto idx = [&](int t, unsigned m) { return t * (int)nm + (int)m; };
    r.parity.resize(r.dim);
    for (int t = 0; t < (int)tabs.size(); ++t)
        for (unsigned m = 0; m < nm; ++m) r.parity[idx(t, m)] = std::popcount(m) % 2;

    for (int i = 1; i <= n; ++i) {
        RMatrix ci(r.dim), xi(r.dim);
        for (int t = 0; t < (int)tabs.size(); ++t) {
            RadExt root = RadExt::sqrt_of(q_val(tabs[t].content_of(i)));
            for (unsigned m = 0; m < nm; ++m) {
                auto [sg, to] = detail::cliff_left(i, m);
                ci.at(idx(t, to), idx(t, m)) = RadExt(Rat(sg));
                int xs = (m >> (i - 1)) & 1u ? -1 : 1;  // x_i c_i = -c_i x_i
                xi.at(idx(t, m), idx(t, m)) = root * RadExt(Rat(xs));
            }
        }
        r.gens["c" + std::to_string(i)] = ci;
        r.gens["x" + std::to_string(i)] = xi;
    }

    // index of the tableau obtained by swapping labels k, k+1
    auto swapped_index = [&](int t, int k) {
        auto cells = tabs[t].cells;
        auto a = tabs[t].cell_of(k);
        auto b = tabs[t].cell_of(k + 1);
        cells[a] = k + 1;
        cells[b] = k;
        for (int u = 0; u < (int)tabs.size(); ++u)
            if (tabs[u].cells == cells) return u;
        throw std::logic_error("swapped tableau not found");
    };

    for (int k = 1; k < n; ++k) {
        RMatrix sk(r.dim);
        unsigned lo = 1u << (k - 1), hi = 1u << k;
        for (int t = 0; t < (int)tabs.size(); ++t) {
            Rat a = q_val(tabs[t].content_of(k));
            Rat b = q_val(tabs[t].content_of(k + 1));
            RadExt ra = RadExt::sqrt_of(a), rb = RadExt::sqrt_of(b);
            RadExt A = (rb - ra).inverse();
            // The sign of the c_k c_{k+1} coefficient is forced by the mixed
            // relation s_k x_k = x_{k+1} s_k - (1 + c_k c_{k+1}): applying both
            // sides to v_T gives B (sqrt a + sqrt b) = -1.
            RadExt B = -((rb + ra).inverse());
            bool stds = detail::swap_standard(tabs[t], k);
            RadExt C = stds ? RadExt::sqrt_of(Rat(1) - Rat(2) * (a + b) / ((b - a) * (b - a)))
                            : RadExt();
            int tswap = stds ? swapped_index(t, k) : -1;
            for (unsigned m = 0; m < nm; ++m) {
                // s_k c^beta = eps c^{beta'} s_k with the k, k+1 bits swapped
                bool bl = m & lo, bh = m & hi;
                unsigned mp = bl != bh ? (m ^ lo) ^ hi : m;
                RadExt eps(Rat(bl && bh ? -1 : 1));
                sk.at(idx(t, mp), idx(t, m)) += eps * A;
                // c^{beta'} c_k c_{k+1} by right multiplication
                auto [sg1, m1] = detail::cliff_right(k, mp);
                auto [sg2, m2] = detail::cliff_right(k + 1, m1);
                sk.at(idx(t, m2), idx(t, m)) += eps * B * RadExt(Rat(sg1 * sg2));
                if (stds) sk.at(idx(tswap, mp), idx(t, m)) += eps * C;
            }
        }
        r.gens["s" + std::to_string(k)] = sk;
    }
    return r;
}

struct IrredInfo {
    Int dim_u;  // dimension of the irreducible constituent
    Int mult;   // multiplicity inside the full seminormal space
};

/// dim U = 2^{n - floor((l(xi) - l(nu))/2)} g^{xi/nu}; the full space is
/// U^{(+) mult} with mult = 2^{floor((l(xi) - l(nu))/2)}.
inline IrredInfo irreducible_multiplicity(const Partition& outer, const Partition& inner = {}) {
    int n = outer.size() - inner.size();
    int half = (outer.length() - inner.length()) / 2;
    Int g = standard_shifted_count(outer, inner);
    return {to_int(pow2(n - half) * Rat(g)), to_int(pow2(half))};
}

/// Exact matrix verification of the defining relations.
inline PropertyReport verify_relations(const Rep& r, bool affine) {
    PropertyReport rep;
    int n = r.n;
    RMatrix I = RMatrix::identity(r.dim);
    auto want = [&](bool cond, const std::string& what) {
        if (!cond) rep.fail(r.label + ": " + what);
    };
    for (int i = 1; i < n; ++i) {
        want(r.s(i) * r.s(i) == I, "s" + std::to_string(i) + "^2 != 1");
        if (i + 1 < n)
            want(r.s(i) * r.s(i + 1) * r.s(i) == r.s(i + 1) * r.s(i) * r.s(i + 1),
                 "braid at " + std::to_string(i));
        for (int j = i + 2; j < n; ++j)
            want(r.s(i) * r.s(j) == r.s(j) * r.s(i), "distant s commute");
    }
    for (int i = 1; i <= n; ++i) {
        want(r.c(i) * r.c(i) == I, "c" + std::to_string(i) + "^2 != 1");
        for (int j = i + 1; j <= n; ++j)
            want(r.c(i) * r.c(j) == -(r.c(j) * r.c(i)), "c anticommute");
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j) {
            RMatrix lhs = r.s(i) * r.c(j);
            RMatrix rhs = j == i       ? r.c(i + 1) * r.s(i)
                          : j == i + 1 ? r.c(i) * r.s(i)
                                       : r.c(j) * r.s(i);
            want(lhs == rhs, "s c exchange at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    if (affine) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                want(r.x(i) * r.x(j) == r.x(j) * r.x(i), "x commute");
        for (int i = 1; i < n; ++i) {
            want(r.s(i) * r.x(i) == r.x(i + 1) * r.s(i) - (I + r.c(i) * r.c(i + 1)),
                 "s" + std::to_string(i) + " x" + std::to_string(i) + " relation");
            for (int j = 1; j <= n; ++j)
                if (j != i && j != i + 1)
                    want(r.s(i) * r.x(j) == r.x(j) * r.s(i), "distant s x commute");
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                want(r.x(i) * r.c(j) == (i == j ? -(r.c(j) * r.x(i)) : r.c(j) * r.x(i)),
                     "x c exchange");
    }
    return rep;
}

/// Transposition (j, k), j < k, as a word in the adjacent reflections.
inline RMatrix transposition(const Rep& r, int j, int k) {
    RMatrix m = RMatrix::identity(r.dim);
    for (int i = j; i < k; ++i) m = m * r.s(i);
    for (int i = k - 2; i >= j; --i) m = m * r.s(i);
    return m;
}

/// J_k = sum_{j<k} (1 + c_j c_k)(j, k).
inline RMatrix jucys_murphy(const Rep& r, int k) {
    RMatrix out(r.dim);
    RMatrix I = RMatrix::identity(r.dim);
    for (int j = 1; j < k; ++j) out = out + (I + r.c(j) * r.c(k)) * transposition(r, j, k);
    return out;
}

/// L_k = sum_{j<k} (j, k).
inline RMatrix sn_jucys_murphy(const Rep& r, int k) {
    RMatrix out(r.dim);
    for (int j = 1; j < k; ++j) out = out + transposition(r, j, k);
    return out;
}

/// phi_k = s_k (x_k^2 - x_{k+1}^2) + (x_k + x_{k+1}) + c_k c_{k+1} (x_k - x_{k+1}).
inline RMatrix intertwiner(const Rep& r, int k) {
    RMatrix xk = r.x(k), xk1 = r.x(k + 1);
    return r.s(k) * (xk * xk - xk1 * xk1) + (xk + xk1) + r.c(k) * r.c(k + 1) * (xk - xk1);
}

// ---------------------------------------------------------------------------
// Symmetric group seminormal form

/// Young's orthogonal/seminormal module for S_n on standard tableaux:
/// s_k v_T = d^{-1} v_T + sqrt(1 - d^{-2}) v_{s_k T}, d = c(T_{k+1}) - c(T_k).
inline Rep sn_seminormal(const Partition& lam) {
    int n = lam.size();
    auto tabs = enumerate_ssyt(lam, std::vector<int>(n, 1));
    Rep r;
    r.n = n;
    r.dim = (int)tabs.size();
    r.label = lam.str();
    if (r.dim > max_module_dim()) throw std::length_error("module dimension exceeds SPINQ_MAX_DIM");
    r.parity.assign(r.dim, 0);
    auto content_of = [&](const std::vector<std::vector<int>>& rows, int label) {
        for (int i = 0; i < (int)rows.size(); ++i)
            for (int j = 0; j < (int)rows[i].size(); ++j)
                if (rows[i][j] == label) return j - i;
        throw std::logic_error("label missing from tableau");
    };
    auto cell_of = [&](const std::vector<std::vector<int>>& rows, int label) {
        for (int i = 0; i < (int)rows.size(); ++i)
            for (int j = 0; j < (int)rows[i].size(); ++j)
                if (rows[i][j] == label) return std::pair<int, int>{i, j};
        throw std::logic_error("label missing from tableau");
    };
    for (int k = 1; k < n; ++k) {
        RMatrix sk(r.dim);
        for (int t = 0; t < (int)tabs.size(); ++t) {
            Rat d = Rat(content_of(tabs[t], k + 1) - content_of(tabs[t], k));
            sk.at(t, t) = RadExt(Rat(1) / d);
            auto a = cell_of(tabs[t], k);
            auto b = cell_of(tabs[t], k + 1);
            if (a.first == b.first || a.second == b.second) continue;  // swap not standard
            auto rows = tabs[t];
            std::swap(rows[a.first][a.second], rows[b.first][b.second]);
            int u = -1;
            for (int w = 0; w < (int)tabs.size(); ++w)
                if (tabs[w] == rows) { u = w; break; }
            if (u < 0) throw std::logic_error("swapped tableau not found");
            sk.at(u, t) = RadExt::sqrt_of(Rat(1) - Rat(1) / (d * d));
        }
        r.gens["s" + std::to_string(k)] = sk;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Characters

/// Trace at the fixed class representative sigma_alpha =
/// (1..a_1)(a_1+1..a_1+a_2)..., each cycle as s_{o+1} s_{o+2} ... .
inline Rat character(const Rep& r, const Partition& alpha) {
    if (alpha.size() != r.n) throw std::invalid_argument("cycle type size mismatch");
    RMatrix m = RMatrix::identity(r.dim);
    int o = 0;
    for (int a : alpha.parts()) {
        for (int i = o + 1; i <= o + a - 1; ++i) m = m * r.s(i);
        o += a;
    }
    return m.trace().as_rational();
}

struct CharVector {
    Partition label;
    std::map<Partition, Int> values;
};

/// Character table of S_n from the seminormal modules.
inline std::vector<CharVector> char_table_symmetric(int n) {
    std::vector<CharVector> out;
    auto classes = enumerate_partitions(n);
    for (const auto& lam : classes) {
        Rep r = sn_seminormal(lam);
        CharVector cv{lam, {}};
        for (const auto& alpha : classes) cv.values[alpha] = to_int(character(r, alpha));
        out.push_back(std::move(cv));
    }
    return out;
}

/// Spin character table: zeta^xi at the even split classes C_alpha^+,
/// alpha in OP_n, from traces on the full seminormal space divided by the
/// multiplicity 2^{(l - delta)/2}.
inline std::vector<CharVector> char_table_spin(int n) {
    std::vector<CharVector> out;
    for (const auto& xi : enumerate_partitions(n, Family::Strict)) {
        Rep r = seminormal_module(xi);
        Rat scale = pow2(-(xi.length() - xi.delta()) / 2);
        CharVector cv{xi, {}};
        for (const auto& alpha : enumerate_partitions(n, Family::Odd))
            cv.values[alpha] = to_int(character(r, alpha) * scale);
        out.push_back(std::move(cv));
    }
    return out;
}

/// ch(chi) = sum_mu z_mu^{-1} chi_mu p_mu over all partitions of n.
inline SymF ch_map(const CharVector& chi, int n) {
    SymF out(n, Basis::p);
    for (const auto& [mu, v] : chi.values) out.add(mu, Rat(v) / Rat(z_of(mu)));
    return out;
}

/// ch^-(phi) = sum over odd alpha of z_alpha^{-1} phi_alpha p_alpha.
inline SymF ch_minus(const CharVector& phi, int n) {
    SymF out(n, Basis::p);
    for (const auto& [alpha, v] : phi.values) {
        if (!alpha.is_odd_parts()) throw std::invalid_argument("class is not odd");
        out.add(alpha, Rat(v) / Rat(z_of(alpha)));
    }
    return out;
}

/// Degree of zeta^xi: 2^{n - (l - delta)/2} n!/prod(xi_i!) prod (xi_i - xi_j)/(xi_i + xi_j).
inline Int degree_formula(const Partition& xi) {
    if (!xi.is_strict()) throw std::invalid_argument("degree formula needs a strict partition");
    int n = xi.size(), l = xi.length();
    Rat g = Rat(factorial(n));
    for (int p : xi.parts()) g /= Rat(factorial(p));
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            g *= Rat(xi.parts()[i] - xi.parts()[j], xi.parts()[i] + xi.parts()[j]);
    return to_int(pow2(n - (l - xi.delta()) / 2) * g);
}

/// (2n)^d = sum over strict lambda of size d with at most n rows of
/// 2^{-delta} (2^{-(l-delta)/2} Q_lambda(1^n)) deg(zeta^lambda).
inline bool sergeev_dimension_check(int n, int d) {
    Rat rhs = 0;
    for (const auto& lam : enumerate_partitions(d, Family::Strict)) {
        if (lam.length() > n) continue;
        Rat q1 = 0;
        MultiPoly<Rat> ex = expand(Q_lambda(lam), n);
        for (const auto& [e, c] : ex.terms()) q1 += c;
        rhs += pow2(-lam.delta()) * pow2(-(lam.length() - lam.delta()) / 2) * q1 *
               Rat(degree_formula(lam));
    }
    Rat lhs = 1;
    for (int i = 0; i < d; ++i) lhs *= Rat(2 * n);
    return lhs == rhs;
}

/// Decomposition of the permutation module: q_mu equals
/// sum over strict lambda of 2^{(l-delta)/2} Khat_{lambda mu} ch^-(zeta^lambda)
/// with the characters measured from the seminormal modules.
inline bool permutation_module_check(const Partition& mu) {
    int n = mu.size();
    auto khat = qmu_in_Q(mu);
    SymF rhs(n, Basis::p);
    for (const auto& cv : char_table_spin(n)) {
        auto it = khat.find(cv.label);
        if (it == khat.end() || it->second == 0) continue;
        Rat coef = pow2((cv.label.length() - cv.label.delta()) / 2) * Rat(it->second);
        rhs = rhs + ch_minus(cv, n) * coef;
    }
    return rhs == q_mu(mu);
}

}  // namespace spinq
