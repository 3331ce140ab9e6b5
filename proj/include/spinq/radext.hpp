#pragma once

#include "spinq/rational.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinq {

namespace detail {

/// a = m^2 * d with d squarefree; returns {m, d}. Trial division up to 10^6.
inline std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t a) {
    if (a <= 0) throw std::domain_error("radicand must be positive");
    std::int64_t m = 1, d = 1;
    for (std::int64_t p = 2; p * p <= a; ++p) {
        if (p > 1000000)
            throw std::domain_error("radicand factor exceeds trial-division bound 10^6");
        int e = 0;
        while (a % p == 0) { a /= p; ++e; }
        for (int i = 0; i + 1 < e; i += 2) m *= p;
        if (e % 2 == 1) d *= p;
    }
    d *= a;  // remaining prime
    return {m, d};
}

}  // namespace detail

// Element of the real multiquadratic field: finite sum of rational multiples
// of sqrt(d) over squarefree positive integers d (d = 1 is the rational part).
class RadExt {
  public:
    RadExt() = default;
    RadExt(const Rat& c) { if (c != 0) terms_[1] = c; }
    RadExt(int c) : RadExt(Rat(c)) {}

    /// c * sqrt(d); d need not be squarefree.
    static RadExt sqrt_term(std::int64_t d, const Rat& c = 1) {
        auto [m, sf] = detail::squarefree_split(d);
        RadExt r;
        r.add(sf, c * m);
        return r;
    }
    /// sqrt of a non-negative rational: sqrt(p/q) = sqrt(pq)/q.
    static RadExt sqrt_of(const Rat& r) {
        if (r < 0) throw std::domain_error("negative radicand");
        if (r == 0) return RadExt();
        std::int64_t p = to_i64(boost::multiprecision::numerator(r));
        std::int64_t q = to_i64(boost::multiprecision::denominator(r));
        return sqrt_term(p * q, Rat(1, q));
    }

    const std::map<std::int64_t, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    Rat rational_part() const {
        auto it = terms_.find(1);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat as_rational() const {
        if (!is_rational()) throw std::domain_error("value is irrational: " + str());
        return rational_part();
    }

    void add(std::int64_t d, const Rat& c) {
        if (c == 0) return;
        Rat& slot = terms_[d];
        slot += c;
        if (slot == 0) terms_.erase(d);
    }

    friend RadExt operator+(const RadExt& a, const RadExt& b) {
        RadExt r = a;
        for (const auto& [d, c] : b.terms_) r.add(d, c);
        return r;
    }
    friend RadExt operator-(const RadExt& a, const RadExt& b) {
        RadExt r = a;
        for (const auto& [d, c] : b.terms_) r.add(d, -c);
        return r;
    }
    friend RadExt operator-(const RadExt& a) { return RadExt() - a; }
    RadExt& operator+=(const RadExt& o) { for (const auto& [d, c] : o.terms_) add(d, c); return *this; }
    RadExt& operator-=(const RadExt& o) { for (const auto& [d, c] : o.terms_) add(d, -c); return *this; }

    friend RadExt operator*(const RadExt& a, const RadExt& b) {
        RadExt r;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) {
                if (da == db) {
                    r.add(1, ca * cb * da);
                } else {
                    std::int64_t g = std::gcd(da, db);
                    // sqrt(da)*sqrt(db) = g * sqrt((da/g)*(db/g))
                    r.add((da / g) * (db / g), ca * cb * g);
                }
            }
        return r;
    }
    RadExt& operator*=(const RadExt& o) { *this = *this * o; return *this; }

    RadExt inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in radical field");
        RadExt num(Rat(1));
        RadExt den = *this;
        // Multiply by conjugates flipping the sign of each prime radicand in turn
        // until the denominator is rational.
        while (!den.is_rational()) {
            std::int64_t p = den.smallest_prime_radicand();
            RadExt conj;
            for (const auto& [d, c] : den.terms_)
                conj.add(d, d % p == 0 ? -c : c);
            num = num * conj;
            den = den * conj;
        }
        return num * RadExt(Rat(1) / den.rational_part());
    }
    friend RadExt operator/(const RadExt& a, const RadExt& b) { return a * b.inverse(); }

    friend bool operator==(const RadExt& a, const RadExt& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RadExt& a, const RadExt& b) { return !(a == b); }
    friend auto operator<=>(const RadExt& a, const RadExt& b) { return a.terms_ <=> b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            Rat a = c;
            if (!first) {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            } else if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
            if (d == 1) os << rat_str(a);
            else if (a == 1) os << "sqrt(" << d << ")";
            else os << rat_str(a) << "*sqrt(" << d << ")";
        }
        return os.str();
    }

  private:
    std::int64_t smallest_prime_radicand() const {
        for (const auto& [d, c] : terms_) {
            if (d == 1) continue;
            std::int64_t v = d;
            for (std::int64_t p = 2; p * p <= v; ++p)
                if (v % p == 0) return p;
            return v;
        }
        throw std::logic_error("no irrational term");
    }

    std::map<std::int64_t, Rat> terms_;
};

}  // namespace spinq
