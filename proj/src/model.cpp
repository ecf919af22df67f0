#include "ucpoly/model.hpp"

namespace ucpoly {

void add_u_window(LinearInequality& row, int lo, int hi, const Rational& coef, const Horizon& h) {
  lo = std::max(lo, 2);
  hi = std::min(hi, h.T);
  for (int i = lo; i <= hi; ++i) row.add(U(i), coef);
}

std::vector<LinearInequality> polytope_rows(const GeneratorParams& p, const Horizon& h) {
  p.validate();
  const int T = h.T;
  std::vector<LinearInequality> rows;

  for (int t = p.min_up + 1; t <= T; ++t) {
    LinearInequality r;
    r.family = "p:min_up";
    r.params["t"] = t;
    add_u_window(r, t - p.min_up + 1, t, 1, h);
    r.add(Y(t), -1);
    r.rhs = 0;
    r.normalize();
    rows.push_back(std::move(r));
  }
  for (int t = p.min_down + 1; t <= T; ++t) {
    LinearInequality r;
    r.family = "p:min_down";
    r.params["t"] = t;
    add_u_window(r, t - p.min_down + 1, t, 1, h);
    r.add(Y(t - p.min_down), 1);
    r.rhs = 1;
    r.normalize();
    rows.push_back(std::move(r));
  }
  for (int t = 2; t <= T; ++t) {
    LinearInequality r;
    r.family = "p:logic";
    r.params["t"] = t;
    r.add(Y(t), 1);
    r.add(Y(t - 1), -1);
    r.add(U(t), -1);
    r.rhs = 0;
    r.normalize();
    rows.push_back(std::move(r));
  }
  for (int t = 1; t <= T; ++t) {
    LinearInequality lb;
    lb.family = "p:lb";
    lb.params["t"] = t;
    lb.add(X(t), -1);
    lb.add(Y(t), p.c_min);
    lb.rhs = 0;
    lb.normalize();
    rows.push_back(std::move(lb));

    LinearInequality ub;
    ub.family = "p:ub";
    ub.params["t"] = t;
    ub.add(X(t), 1);
    ub.add(Y(t), -p.c_max);
    ub.rhs = 0;
    ub.normalize();
    rows.push_back(std::move(ub));
  }
  for (int t = 2; t <= T; ++t) {
    // x_t - x_{t-1} <= V y_{t-1} + Vbar (1 - y_{t-1})
    LinearInequality up;
    up.family = "p:ramp_up";
    up.params["t"] = t;
    up.add(X(t), 1);
    up.add(X(t - 1), -1);
    up.add(Y(t - 1), p.startstop_ramp - p.ramp);
    up.rhs = p.startstop_ramp;
    up.normalize();
    rows.push_back(std::move(up));

    // x_{t-1} - x_t <= V y_t + Vbar (1 - y_t)
    LinearInequality dn;
    dn.family = "p:ramp_down";
    dn.params["t"] = t;
    dn.add(X(t - 1), 1);
    dn.add(X(t), -1);
    dn.add(Y(t), p.startstop_ramp - p.ramp);
    dn.rhs = p.startstop_ramp;
    dn.normalize();
    rows.push_back(std::move(dn));
  }
  return rows;
}

bool is_feasible_schedule(const Schedule& s, const GeneratorParams& p, const Horizon& h) {
  const int T = h.T;
  if (static_cast<int>(s.y.size()) != T || static_cast<int>(s.u.size()) != T - 1) return false;
  for (int v : s.y)
    if (v != 0 && v != 1) return false;
  for (int v : s.u)
    if (v != 0 && v != 1) return false;

  for (int t = p.min_up + 1; t <= T; ++t) {
    int sum = 0;
    for (int i = std::max(2, t - p.min_up + 1); i <= t; ++i) sum += s.ut(i);
    if (sum > s.yt(t)) return false;
  }
  for (int t = p.min_down + 1; t <= T; ++t) {
    int sum = 0;
    for (int i = std::max(2, t - p.min_down + 1); i <= t; ++i) sum += s.ut(i);
    if (sum > 1 - s.yt(t - p.min_down)) return false;
  }
  for (int t = 2; t <= T; ++t)
    if (s.yt(t) - s.yt(t - 1) > s.ut(t)) return false;
  return true;
}

namespace {

template <typename Scalar>
bool dispatch_ok(const PointT<Scalar>& pt, const GeneratorParams& p, const Horizon& h,
                 const Scalar& tol) {
  const Scalar C(p.c_min), Cb(p.c_max), V(p.ramp), Vb(p.startstop_ramp);
  for (int t = 1; t <= h.T; ++t) {
    if (pt.x(t) < C * pt.y(t) - tol) return false;
    if (pt.x(t) > Cb * pt.y(t) + tol) return false;
  }
  for (int t = 2; t <= h.T; ++t) {
    if (pt.x(t) - pt.x(t - 1) > V * pt.y(t - 1) + Vb * (Scalar(1) - pt.y(t - 1)) + tol) return false;
    if (pt.x(t - 1) - pt.x(t) > V * pt.y(t) + Vb * (Scalar(1) - pt.y(t)) + tol) return false;
  }
  return true;
}

}  // namespace

bool is_feasible_point(const Point& pt, const GeneratorParams& p, const Horizon& h) {
  auto s = schedule_of(pt);
  if (!s || !is_feasible_schedule(*s, p, h)) return false;
  return dispatch_ok<Rational>(pt, p, h, Rational(0));
}

bool is_feasible_point(const PointD& pt, const GeneratorParams& p, const Horizon& h, double tol) {
  Schedule s;
  s.y.resize(static_cast<size_t>(h.T));
  s.u.resize(static_cast<size_t>(h.T - 1));
  auto as_binary = [&](double v, int& out) {
    if (std::abs(v) <= tol) out = 0;
    else if (std::abs(v - 1.0) <= tol) out = 1;
    else return false;
    return true;
  };
  for (int t = 1; t <= h.T; ++t)
    if (!as_binary(pt.y(t), s.y[static_cast<size_t>(t - 1)])) return false;
  for (int t = 2; t <= h.T; ++t)
    if (!as_binary(pt.u(t), s.u[static_cast<size_t>(t - 2)])) return false;
  if (!is_feasible_schedule(s, p, h)) return false;
  return dispatch_ok<double>(pt, p, h, tol);
}

std::optional<Schedule> schedule_of(const Point& pt) {
  const Horizon& h = pt.horizon;
  Schedule s;
  s.y.resize(static_cast<size_t>(h.T));
  s.u.resize(static_cast<size_t>(h.T - 1));
  for (int t = 1; t <= h.T; ++t) {
    const Rational& v = pt.y(t);
    if (v != 0 && v != 1) return std::nullopt;
    s.y[static_cast<size_t>(t - 1)] = (v == 1);
  }
  for (int t = 2; t <= h.T; ++t) {
    const Rational& v = pt.u(t);
    if (v != 0 && v != 1) return std::nullopt;
    s.u[static_cast<size_t>(t - 2)] = (v == 1);
  }
  return s;
}

}  // namespace ucpoly
