#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace ucpoly {

// Expression templates stay off: Eigen needs plain value semantics from its
// scalar type.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorR = VectorX<Rational>;
using MatrixR = MatrixX<Rational>;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline double to_double(double x) { return x; }

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Exact floor of a rational (denominator is kept positive by cpp_rational).
inline BigInt rational_floor(const Rational& q) {
  BigInt n = num(q), d = den(q);
  BigInt quot = n / d;
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

inline long floor_long(const Rational& q) { return rational_floor(q).convert_to<long>(); }

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// [x]+ on integers.
inline long pos_part(long x) { return x > 0 ? x : 0; }

inline std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

/// Parses "p", "p/q" or a plain decimal like "32.4" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace ucpoly
