#ifndef REDPAIR_NUMERIC_HPP
#define REDPAIR_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace redpair {

// Exact arbitrary-precision scalars. Rationals are kept canonical
// (lowest terms, positive denominator) by the backend.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Rational vector, a point of t* (or of t). Length = torus rank.
using VecQ = std::vector<Rat>;

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline int rat_sign(const Rat& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

/// Parses "p/q", "p", or a plain integer string into a canonical rational.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num) / Rat(den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: \"" + s + "\"");
    }
}

/// Canonical text form: "p/q", or "p" when the denominator is 1.
inline std::string rat_str(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline VecQ vec_add(const VecQ& a, const VecQ& b) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline VecQ vec_sub(const VecQ& a, const VecQ& b) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline std::string vec_str(const VecQ& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s + ")";
}

inline Rat factorial(int n) {
    Rat r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace redpair

#endif
