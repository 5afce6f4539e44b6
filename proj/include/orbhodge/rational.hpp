#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace orbhodge {

/// Arbitrary-precision exact scalars. The whole core works over these; no
/// floating point enters any computation.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

/// Errors raised when an input document cannot be parsed or is malformed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

/// Errors raised when an operation's preconditions are violated.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(num(q), den(q)); }

/// Fractional part in [0,1).
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

/// Renders a rational as "p/q", integers bare.
inline std::string rat_to_string(const Rat& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

/// Parses "p", "-p" or "p/q" with q > 0 after reduction.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rat(p) / Rat(q);
    } catch (const std::runtime_error&) {
        throw ParseError("cannot parse rational '" + s + "'");
    }
}

inline VecZ to_vecz(const std::vector<long long>& v) {
    VecZ out(static_cast<Index>(v.size()));
    for (Index i = 0; i < out.size(); ++i) out[i] = v[static_cast<size_t>(i)];
    return out;
}

inline VecQ to_vecq(const VecZ& v) {
    VecQ out(v.size());
    for (Index i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

inline MatQ to_matq(const MatZ& m) {
    MatQ out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

inline Rat dotq(const VecQ& a, const VecQ& b) {
    Rat s = 0;
    for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int dotz(const VecZ& a, const VecZ& b) {
    Int s = 0;
    for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace orbhodge
