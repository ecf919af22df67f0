#pragma once

#include "ucpoly/types.hpp"

#include <vector>

namespace ucpoly {

// ---------------------------------------------------------------------------
// The mixed 0-1 set P over (x, y, u): minimum-up/-down, start-up logic,
// generation bounds, and ramping. All rows are kept in "a.z <= b" form.
// ---------------------------------------------------------------------------

/// Sum of u_i over [lo, hi] clamped to the valid u range [2, T]; empty ranges
/// contribute nothing.
void add_u_window(LinearInequality& row, int lo, int hi, const Rational& coef, const Horizon& h);

/// The defining rows of P for one unit: min-up, min-down, logic, lower/upper
/// generation bounds, ramp-up, ramp-down. Tags: "p:min_up", "p:min_down",
/// "p:logic", "p:lb", "p:ub", "p:ramp_up", "p:ramp_down".
std::vector<LinearInequality> polytope_rows(const GeneratorParams& p, const Horizon& h);

/// True iff the binary pattern satisfies min-up, min-down and logic rows.
bool is_feasible_schedule(const Schedule& s, const GeneratorParams& p, const Horizon& h);

/// Exact membership test for binary-committed points (Scalar = Rational makes
/// tol unused; float callers pass a nonnegative slack).
bool is_feasible_point(const Point& pt, const GeneratorParams& p, const Horizon& h);
bool is_feasible_point(const PointD& pt, const GeneratorParams& p, const Horizon& h, double tol);

/// Extracts the (y, u) pattern of a point whose committed coordinates are
/// 0/1; returns nothing if any y or u coordinate is fractional.
std::optional<Schedule> schedule_of(const Point& pt);

}  // namespace ucpoly
