#pragma once

#include "spinq/partition.hpp"
#include "spinq/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace spinq {

// Polynomial in a fixed number of variables x_1..x_N; exponents may be
// negative (Laurent monomials). Coefficient type C is Rat or Poly.
template <class C>
class MultiPoly {
  public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const C& c) {
        MultiPoly f(nvars);
        f.add(std::vector<int>(nvars, 0), c);
        return f;
    }
    static MultiPoly var(int nvars, int i, int exp = 1) {
        MultiPoly f(nvars);
        std::vector<int> e(nvars, 0);
        e[i] = exp;
        f.add(e, C(1));
        return f;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, C>& terms() const { return terms_; }

    void add(const std::vector<int>& e, const C& c) {
        if (c == C(0)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }
    C coeff(const std::vector<int>& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add(e, C(0) - c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(std::max(a.nvars_, b.nvars_));
        std::vector<int> e(r.nvars_, 0);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < r.nvars_; ++i)
                    e[i] = (i < (int)ea.size() ? ea[i] : 0) + (i < (int)eb.size() ? eb[i] : 0);
                r.add(e, ca * cb);
            }
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const C& c) {
        MultiPoly r(a.nvars_);
        for (const auto& [e, cc] : a.terms_) r.add(e, cc * c);
        return r;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Applies a permutation of the variables: x_i -> x_{perm[i]}.
    MultiPoly permuted(const std::vector<int>& perm) const {
        MultiPoly r(nvars_);
        std::vector<int> e(nvars_);
        for (const auto& [ea, c] : terms_) {
            for (int i = 0; i < nvars_; ++i) e[perm[i]] = ea[i];
            r.add(e, c);
        }
        return r;
    }

    bool is_symmetric() const {
        for (int i = 0; i + 1 < nvars_; ++i) {
            std::vector<int> perm(nvars_);
            for (int k = 0; k < nvars_; ++k) perm[k] = k;
            std::swap(perm[i], perm[i + 1]);
            if (!(permuted(perm) == *this)) return false;
        }
        return true;
    }

    /// Exact quotient by (x_i - c x_j); throws if the division is not exact.
    MultiPoly divexact_linear(int i, int j, const C& c) const {
        // univariate view in x_i with MultiPoly coefficients
        std::map<int, MultiPoly> coeffs;  // deg in x_i -> rest (exponent of x_i zeroed)
        for (const auto& [e, cc] : terms_) {
            auto& slot = coeffs.try_emplace(e[i], MultiPoly(nvars_)).first->second;
            std::vector<int> er = e;
            er[i] = 0;
            slot.add(er, cc);
        }
        if (coeffs.empty()) return MultiPoly(nvars_);
        int lo = coeffs.begin()->first, hi = coeffs.rbegin()->first;
        MultiPoly q(nvars_), carry(nvars_);
        std::vector<int> ei(nvars_, 0);
        for (int k = hi; k > lo; --k) {
            auto it = coeffs.find(k);
            MultiPoly qk = carry + (it == coeffs.end() ? MultiPoly(nvars_) : it->second);
            // quotient coefficient of x_i^{k-1}; carry c*x_j*qk into the next row
            for (const auto& [e, cc] : qk.terms_) {
                std::vector<int> eq = e;
                eq[i] = k - 1;
                q.add(eq, cc);
            }
            carry = qk * MultiPoly::var(nvars_, j) * c;
        }
        auto it = coeffs.find(lo);
        MultiPoly rem = carry + (it == coeffs.end() ? MultiPoly(nvars_) : it->second);
        if (!rem.is_zero()) throw std::domain_error("division by x_i - c x_j is not exact");
        return q;
    }

    /// Substitutes x_i -> values[i] (exponents must be non-negative).
    C eval(const std::vector<C>& values) const {
        C total(0);
        for (const auto& [e, cc] : terms_) {
            C term = cc;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] < 0) throw std::domain_error("cannot evaluate a Laurent monomial");
                for (int k = 0; k < e[i]; ++k) term = term * values[i];
            }
            total = total + term;
        }
        return total;
    }

  private:
    int nvars_;
    std::map<std::vector<int>, C> terms_;
};

/// Monomial symmetric polynomial m_lambda(x_1..x_N).
template <class C>
MultiPoly<C> monomial_sym(const Partition& lam, int nvars) {
    MultiPoly<C> f(nvars);
    if (lam.length() > nvars) return f;
    std::vector<int> e(lam.parts().begin(), lam.parts().end());
    e.resize(nvars, 0);
    std::sort(e.begin(), e.end());
    do {
        f.add(e, C(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return f;
}

}  // namespace spinq
