#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

/// 2^k as an exact rational, k may be negative.
inline Rat pow2(int k) {
    Int p = Int(1) << (k < 0 ? -k : k);
    return k >= 0 ? Rat(p) : Rat(1, p);
}

inline std::string rat_str(const Rat& r) {
    return r.str();
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline bool is_integer(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("rational is not an integer: " + r.str());
    return boost::multiprecision::numerator(r);
}

inline std::int64_t to_i64(const Int& v) {
    return v.convert_to<std::int64_t>();
}

}  // namespace spinq
