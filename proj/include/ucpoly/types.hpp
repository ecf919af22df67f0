#pragma once

#include "ucpoly/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucpoly {

// ---------------------------------------------------------------------------
// Variable space. Periods are 1-based: x_t, y_t for t in [1,T], u_t for
// t in [2,T] (no start-up variable in the first period). A point lives in
// R^{3T-1}, laid out as [x_1..x_T | y_1..y_T | u_2..u_T].
// ---------------------------------------------------------------------------

enum class Var : std::uint8_t { X = 0, Y = 1, U = 2 };

struct VarKey {
  Var kind;
  int t;

  friend bool operator==(const VarKey& a, const VarKey& b) {
    return a.kind == b.kind && a.t == b.t;
  }
  friend bool operator<(const VarKey& a, const VarKey& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.t < b.t;
  }
};

inline VarKey X(int t) { return {Var::X, t}; }
inline VarKey Y(int t) { return {Var::Y, t}; }
inline VarKey U(int t) { return {Var::U, t}; }

std::string to_string(const VarKey& k);

struct Horizon {
  int T = 0;

  explicit Horizon(int periods) : T(periods) {
    if (T < 1) throw std::invalid_argument("horizon needs at least one period");
  }

  int dim() const { return 3 * T - 1; }

  bool contains(const VarKey& k) const {
    if (k.kind == Var::U) return k.t >= 2 && k.t <= T;
    return k.t >= 1 && k.t <= T;
  }

  int index(const VarKey& k) const {
    switch (k.kind) {
      case Var::X: return k.t - 1;
      case Var::Y: return T + k.t - 1;
      case Var::U: return 2 * T + k.t - 2;
    }
    return -1;
  }

  VarKey key_of(int index) const {
    if (index < T) return X(index + 1);
    if (index < 2 * T) return Y(index - T + 1);
    return U(index - 2 * T + 2);
  }

  friend bool operator==(const Horizon& a, const Horizon& b) { return a.T == b.T; }
};

// ---------------------------------------------------------------------------
// Generator data. Physical limits are exact rationals (hull certification
// needs exact arithmetic); cost coefficients stay floating point, they only
// enter objectives.
// ---------------------------------------------------------------------------

struct GeneratorParams {
  Rational c_min;          // minimum output when online (MW)
  Rational c_max;          // maximum output when online (MW)
  Rational ramp;           // ramp-up/-down limit between online periods (MW/h)
  Rational startstop_ramp; // output cap in a start-up/shut-down period (MW/h)
  int min_up = 1;
  int min_down = 1;
  double startup_cost = 0.0;
  double shutdown_cost = 0.0;
  double cost_a = 0.0;  // $/MW^2 h
  double cost_b = 0.0;  // $/MWh
  double cost_c = 0.0;  // $/h

  void validate() const;
};

GeneratorParams make_params(const Rational& c_min, const Rational& c_max, const Rational& ramp,
                            const Rational& startstop_ramp, int min_up = 1, int min_down = 1);

enum class ParamCase { Case1 = 1, Case2, Case3, Case4, Case5 };
enum class TwoVRegime { GE, LT };  // sign of c_max - c_min - 2*ramp

struct CaseInfo {
  ParamCase case_id;
  TwoVRegime reg_2v;
};

std::string to_string(ParamCase c);
std::string to_string(TwoVRegime r);

/// Classifies admissible parameters into the five mutually exclusive regimes.
/// Rejects startstop_ramp below c_min (outside the admissible set).
CaseInfo classify(const GeneratorParams& p);

// ---------------------------------------------------------------------------
// Commitment pattern and points.
// ---------------------------------------------------------------------------

struct Schedule {
  std::vector<int> y;  // length T, entries in {0,1}
  std::vector<int> u;  // length T-1, u[i] is the start-up flag of period i+2

  int yt(int t) const { return y[static_cast<size_t>(t - 1)]; }
  int ut(int t) const { return u[static_cast<size_t>(t - 2)]; }

  friend bool operator==(const Schedule& a, const Schedule& b) { return a.y == b.y && a.u == b.u; }
  friend bool operator<(const Schedule& a, const Schedule& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.u < b.u;
  }
};

template <typename Scalar>
struct PointT {
  Horizon horizon;
  VectorX<Scalar> z;  // dense coordinates, layout per Horizon::index

  explicit PointT(Horizon h) : horizon(h), z(VectorX<Scalar>::Zero(h.dim())) {}

  Scalar& operator[](const VarKey& k) { return z[horizon.index(k)]; }
  const Scalar& operator[](const VarKey& k) const { return z[horizon.index(k)]; }

  Scalar& x(int t) { return (*this)[X(t)]; }
  Scalar& y(int t) { return (*this)[Y(t)]; }
  Scalar& u(int t) { return (*this)[U(t)]; }
  const Scalar& x(int t) const { return (*this)[X(t)]; }
  const Scalar& y(int t) const { return (*this)[Y(t)]; }
  const Scalar& u(int t) const { return (*this)[U(t)]; }
};

using Point = PointT<Rational>;
using PointD = PointT<double>;

Point point_from_schedule(const Schedule& s, const std::vector<Rational>& x, const Horizon& h);
PointD to_double_point(const Point& p);

// ---------------------------------------------------------------------------
// Sparse inequality row: coeffs . z <= rhs.
// ---------------------------------------------------------------------------

struct LinearInequality {
  std::vector<std::pair<VarKey, Rational>> coeffs;  // sorted by key, no duplicates
  Rational rhs = 0;
  std::string family;                 // family tag, e.g. "q2:x2_ub", "ineq21"
  std::map<std::string, long> params; // family index parameters (t, k, m, n, ...)
  std::vector<int> set_s;             // the S index set for exponential families
  bool facet_claimed = false;

  void add(const VarKey& k, const Rational& c);
  void normalize();  // sorts keys, merges duplicates, drops zeros

  template <typename Scalar>
  Scalar lhs(const PointT<Scalar>& p) const {
    Scalar acc(0);
    for (const auto& [k, c] : coeffs) acc += static_cast<Scalar>(c) * p[k];
    return acc;
  }

  /// lhs - rhs; positive means violated.
  template <typename Scalar>
  Scalar violation(const PointT<Scalar>& p) const {
    return lhs(p) - static_cast<Scalar>(rhs);
  }

  VectorR dense_row(const Horizon& h) const;
  bool inside(const Horizon& h) const;
  std::string describe() const;
};

template <>
inline double LinearInequality::lhs<double>(const PointT<double>& p) const {
  double acc = 0.0;
  for (const auto& [k, c] : coeffs) acc += to_double(c) * p[k];
  return acc;
}

inline Rational eval_violation(const LinearInequality& ineq, const Point& p) {
  return ineq.violation(p);
}

}  // namespace ucpoly
