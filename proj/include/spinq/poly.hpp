#pragma once

#include "spinq/rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinq {

// Polynomials in t (and optionally s) with exact rational coefficients.
// Key = {degree in t, degree in s}; zero coefficients are never stored.
class Poly {
  public:
    using Key = std::array<int, 2>;

    Poly() = default;
    Poly(const Rat& c) { if (c != 0) terms_[{0, 0}] = c; }
    Poly(int c) : Poly(Rat(c)) {}

    static Poly t(int k = 1) { Poly p; p.terms_[{k, 0}] = 1; return p; }
    static Poly s(int k = 1) { Poly p; p.terms_[{0, k}] = 1; return p; }
    static Poly monomial(int dt, int ds, const Rat& c) {
        Poly p;
        if (c != 0) p.terms_[{dt, ds}] = c;
        return p;
    }

    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
    }
    bool is_univariate_t() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& kv) { return kv.first[1] == 0; });
    }
    Rat constant_term() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat coeff(int dt, int ds = 0) const {
        auto it = terms_.find({dt, ds});
        return it == terms_.end() ? Rat(0) : it->second;
    }
    int degree_t() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k[0]);
        return d;
    }
    int degree_s() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k[1]);
        return d;
    }

    void add_term(int dt, int ds, const Rat& c) {
        if (c == 0) return;
        Rat& slot = terms_[{dt, ds}];
        slot += c;
        if (slot == 0) terms_.erase({dt, ds});
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator-(const Poly& a) { Poly z; return z - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka[0] + kb[0], ka[1] + kb[1], ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend Poly operator*(const Poly& a, const Rat& c) {
        Poly r;
        for (const auto& [k, v] : a.terms_) r.add_term(k[0], k[1], v * c);
        return r;
    }
    friend Poly operator*(const Rat& c, const Poly& a) { return a * c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend auto operator<=>(const Poly& a, const Poly& b) { return a.terms_ <=> b.terms_; }

    Rat eval(const Rat& tv, const Rat& sv = 0) const {
        Rat r = 0;
        for (const auto& [k, c] : terms_) {
            Rat m = c;
            for (int i = 0; i < k[0]; ++i) m *= tv;
            for (int i = 0; i < k[1]; ++i) m *= sv;
            r += m;
        }
        return r;
    }

    /// Substitute t -> t^-1 and multiply by t^shift (shift must clear all negatives).
    Poly reverse_t(int shift) const {
        Poly r;
        for (const auto& [k, c] : terms_) {
            int dt = shift - k[0];
            if (dt < 0) throw std::domain_error("reverse_t: negative exponent");
            r.add_term(dt, k[1], c);
        }
        return r;
    }

    Poly truncated(int ord_t, int ord_s = -1) const {
        Poly r;
        for (const auto& [k, c] : terms_)
            if (k[0] <= ord_t && (ord_s < 0 || k[1] <= ord_s)) r.add_term(k[0], k[1], c);
        return r;
    }

    /// Dense coefficient list in t (requires univariate in t).
    std::vector<Rat> dense_t() const {
        if (!is_univariate_t()) throw std::domain_error("poly is not univariate in t");
        std::vector<Rat> v(static_cast<size_t>(degree_t()) + 1, Rat(0));
        for (const auto& [k, c] : terms_) v[static_cast<size_t>(k[0])] = c;
        return v;
    }
    static Poly from_dense_t(const std::vector<Rat>& v) {
        Poly p;
        for (size_t i = 0; i < v.size(); ++i) p.add_term(static_cast<int>(i), 0, v[i]);
        return p;
    }

    // Ascending powers with explicit '+': "1 + 2*t + t^2", "t*s" etc.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Rat a = c;
            if (!first) {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            } else if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
            std::string mono;
            if (k[0] > 0) mono += (k[0] == 1 ? "t" : "t^" + std::to_string(k[0]));
            if (k[1] > 0) {
                if (!mono.empty()) mono += "*";
                mono += (k[1] == 1 ? "s" : "s^" + std::to_string(k[1]));
            }
            if (mono.empty()) os << rat_str(a);
            else if (a == 1) os << mono;
            else os << rat_str(a) << "*" << mono;
        }
        return os.str();
    }

  private:
    std::map<Key, Rat> terms_;
};

namespace detail {

// Univariate Euclidean helpers over Q, dense ascending representation.
inline void dense_trim(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::vector<Rat> dense_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        dense_trim(a);
    }
    return a;
}

inline std::vector<Rat> dense_divexact(std::vector<Rat> a, const std::vector<Rat>& b) {
    std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        dense_trim(a);
    }
    if (!a.empty()) throw std::domain_error("polynomial division is not exact");
    return q;
}

inline std::vector<Rat> dense_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    dense_trim(a);
    dense_trim(b);
    while (!b.empty()) {
        auto r = dense_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;  // monic gcd
    }
    return a;
}

}  // namespace detail

/// gcd over Q[t] of univariate-in-t polynomials, monic.
inline Poly poly_gcd_t(const Poly& a, const Poly& b) {
    return Poly::from_dense_t(detail::dense_gcd(a.dense_t(), b.dense_t()));
}

/// Exact division a/b where b is univariate in t; a may involve s
/// (division is applied coefficient-wise in s).
inline Poly poly_divexact_t(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::map<int, std::vector<Rat>> by_s;
    for (const auto& [k, c] : a.terms()) {
        auto& v = by_s[k[1]];
        if (v.size() <= static_cast<size_t>(k[0])) v.resize(static_cast<size_t>(k[0]) + 1, Rat(0));
        v[static_cast<size_t>(k[0])] = c;
    }
    auto bd = b.dense_t();
    Poly r;
    for (auto& [ds, v] : by_s) {
        detail::dense_trim(v);
        auto q = detail::dense_divexact(v, bd);
        for (size_t i = 0; i < q.size(); ++i) r.add_term(static_cast<int>(i), ds, q[i]);
    }
    return r;
}

// Ratio of polynomials; denominator univariate in t, kept monic, gcd-reduced.
class RatFun {
  public:
    RatFun() : num_(), den_(Rat(1)) {}
    RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFun(int c) : num_(Rat(c)), den_(Rat(1)) {}
    RatFun(Poly n) : num_(std::move(n)), den_(Rat(1)) {}
    RatFun(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly(Rat(1)); }

    Poly as_polynomial() const {
        if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial: " + str());
        return num_;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        if (!b.num_.is_univariate_t())
            throw std::domain_error("division by a rational function with s in the numerator");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (!den_.is_univariate_t())
            throw std::domain_error("denominator must be univariate in t");
        if (num_.is_zero()) { den_ = Poly(Rat(1)); return; }
        // gcd of the denominator with every s-coefficient of the numerator
        auto g = den_.dense_t();
        std::map<int, Poly> by_s;
        for (const auto& [k, c] : num_.terms())
            by_s[k[1]].add_term(k[0], 0, c);
        for (const auto& [ds, p] : by_s) {
            g = detail::dense_gcd(g, p.dense_t());
            if (g.size() == 1) break;
        }
        Poly gp = Poly::from_dense_t(g);
        num_ = poly_divexact_t(num_, gp);
        den_ = poly_divexact_t(den_, gp);
        // monic denominator
        Rat lead = den_.dense_t().back();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly num_;
    Poly den_;
};

// Truncated power series in t; arithmetic never reads beyond `order`.
class TruncSeries {
  public:
    TruncSeries() : coeffs_(1, Rat(0)) {}
    TruncSeries(int order, Rat c0 = 0) : coeffs_(static_cast<size_t>(order) + 1, Rat(0)) {
        coeffs_[0] = c0;
    }
    explicit TruncSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.assign(1, Rat(0));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    void set(int i, const Rat& c) { coeffs_[static_cast<size_t>(i)] = c; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) r.set(i, a[i] + b[i]);
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) r.set(i, a[i] - b[i]);
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i)
            for (int j = 0; i + j <= r.order(); ++j)
                r.coeffs_[static_cast<size_t>(i + j)] += a[i] * b[j];
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order(), b.order());
        for (int i = 0; i <= n; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

  private:
    std::vector<Rat> coeffs_;
};

/// Series expansion of a univariate rational function at t = 0.
inline TruncSeries series_of(const RatFun& f, int order) {
    if (!f.num().is_univariate_t())
        throw std::domain_error("series_of: numerator involves s");
    Rat d0 = f.den().constant_term();
    if (d0 == 0) throw std::domain_error("series_of: denominator vanishes at t = 0");
    auto num = f.num();
    auto den = f.den();
    TruncSeries r(order);
    // c_k = (n_k - sum_{j<k} c_j d_{k-j}) / d_0
    for (int k = 0; k <= order; ++k) {
        Rat acc = num.coeff(k);
        for (int j = 0; j < k; ++j) acc -= r[j] * den.coeff(k - j);
        r.set(k, acc / d0);
    }
    return r;
}

inline TruncSeries series_of(const Poly& p, int order) {
    return series_of(RatFun(p), order);
}

}  // namespace spinq
