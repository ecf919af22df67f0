#include "ucpoly/hull_oracle.hpp"

#include "ucpoly/simplex.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace ucpoly {

std::vector<Schedule> enumerate_schedules(const GeneratorParams& p, const Horizon& h, int cap) {
  if (h.T > cap) throw std::invalid_argument("schedule enumeration cap exceeded");
  const int T = h.T;
  std::vector<Schedule> out;
  Schedule s;
  s.y.assign(static_cast<size_t>(T), 0);
  s.u.assign(static_cast<size_t>(T > 0 ? T - 1 : 0), 0);

  // Window sums are backward-looking, so prefixes can be checked as soon as
  // period t is fixed.
  auto prefix_ok = [&](int t) {
    if (t >= 2 && s.yt(t) - s.yt(t - 1) > s.ut(t)) return false;
    if (t >= p.min_up + 1) {
      int sum = 0;
      for (int i = std::max(2, t - p.min_up + 1); i <= t; ++i) sum += s.ut(i);
      if (sum > s.yt(t)) return false;
    }
    if (t >= p.min_down + 1) {
      int sum = 0;
      for (int i = std::max(2, t - p.min_down + 1); i <= t; ++i) sum += s.ut(i);
      if (sum > 1 - s.yt(t - p.min_down)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int t) -> void {
    if (t > T) {
      out.push_back(s);
      return;
    }
    for (int yv = 0; yv <= 1; ++yv) {
      s.y[static_cast<size_t>(t - 1)] = yv;
      if (t == 1) {
        if (prefix_ok(t)) self(self, t + 1);
      } else {
        for (int uv = 0; uv <= 1; ++uv) {
          s.u[static_cast<size_t>(t - 2)] = uv;
          if (prefix_ok(t)) self(self, t + 1);
        }
        s.u[static_cast<size_t>(t - 2)] = 0;
      }
    }
    s.y[static_cast<size_t>(t - 1)] = 0;
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Vertices of one online run's dispatch polytope:
// C <= x_i <= Cbar, |x_{i+1} - x_i| <= V, optional start/end caps x <= Vbar.
std::vector<std::vector<Rational>> run_vertices(int len, bool cap_start, bool cap_end,
                                                const GeneratorParams& p) {
  if (len > kDispatchRunCap) throw std::invalid_argument("dispatch run too long to enumerate");
  std::vector<VectorR> lhs;
  std::vector<Rational> rhs;
  auto push = [&](VectorR a, Rational b) {
    lhs.push_back(std::move(a));
    rhs.push_back(std::move(b));
  };
  for (int i = 0; i < len; ++i) {
    VectorR low = VectorR::Zero(len);
    low[i] = -1;
    push(low, -p.c_min);
    VectorR up = VectorR::Zero(len);
    up[i] = 1;
    push(up, p.c_max);
  }
  for (int i = 0; i + 1 < len; ++i) {
    VectorR a = VectorR::Zero(len);
    a[i + 1] = 1;
    a[i] = -1;
    push(a, p.ramp);
    VectorR b = VectorR::Zero(len);
    b[i] = 1;
    b[i + 1] = -1;
    push(b, p.ramp);
  }
  if (cap_start) {
    VectorR a = VectorR::Zero(len);
    a[0] = 1;
    push(a, p.startstop_ramp);
  }
  if (cap_end) {
    VectorR a = VectorR::Zero(len);
    a[len - 1] = 1;
    push(a, p.startstop_ramp);
  }

  std::vector<IntRow> int_rows;
  bool ints_ok = true;
  for (size_t i = 0; i < lhs.size(); ++i) {
    auto r = scale_row(lhs[i], rhs[i]);
    if (!r) {
      ints_ok = false;
      break;
    }
    int_rows.push_back(std::move(*r));
  }
  std::vector<VectorR> verts = ints_ok ? enumerate_h_vertices(int_rows, len)
                                       : enumerate_h_vertices_rational(lhs, rhs, len);
  std::vector<std::vector<Rational>> out;
  out.reserve(verts.size());
  for (const auto& v : verts) {
    std::vector<Rational> x(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) x[static_cast<size_t>(i)] = v[i];
    out.push_back(std::move(x));
  }
  return out;
}

struct Run {
  int start, end;  // 1-based inclusive
};

std::vector<Run> runs_of(const Schedule& s, int T) {
  std::vector<Run> runs;
  int t = 1;
  while (t <= T) {
    if (s.yt(t) == 1) {
      int a = t;
      while (t + 1 <= T && s.yt(t + 1) == 1) ++t;
      runs.push_back({a, t});
    }
    ++t;
  }
  return runs;
}

}  // namespace

std::vector<std::vector<Rational>> dispatch_vertices(const Schedule& s, const GeneratorParams& p,
                                                     const Horizon& h) {
  const int T = h.T;
  auto runs = runs_of(s, T);
  std::vector<std::vector<std::vector<Rational>>> per_run;
  for (const auto& r : runs)
    per_run.push_back(run_vertices(r.end - r.start + 1, r.start >= 2, r.end <= T - 1, p));

  std::vector<std::vector<Rational>> out;
  std::vector<size_t> idx(runs.size(), 0);
  while (true) {
    std::vector<Rational> x(static_cast<size_t>(T), Rational(0));
    for (size_t k = 0; k < runs.size(); ++k) {
      const auto& rv = per_run[k][idx[k]];
      for (int t = runs[k].start; t <= runs[k].end; ++t)
        x[static_cast<size_t>(t - 1)] = rv[static_cast<size_t>(t - runs[k].start)];
    }
    out.push_back(std::move(x));
    // advance the product, last run fastest
    size_t k = runs.size();
    while (k > 0) {
      --k;
      if (++idx[k] < per_run[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (runs.empty()) return out;
  }
}

void VertexSet::build_int_cache() {
  int_cache_ = false;
  BigInt lcm = 1;
  for (const auto& pt : points)
    for (int i = 0; i < pt.z.size(); ++i) lcm = boost::multiprecision::lcm(lcm, den(pt.z[i]));
  if (lcm > BigInt(1) << 40) return;
  long long d = lcm.convert_to<long long>();
  const BigInt cap = BigInt(1) << 60;
  coords_.clear();
  coords_.reserve(points.size());
  long long maxc = 0;
  for (const auto& pt : points) {
    std::vector<long long> c(static_cast<size_t>(pt.z.size()));
    for (int i = 0; i < pt.z.size(); ++i) {
      BigInt v = num(pt.z[i]) * (lcm / den(pt.z[i]));
      if (v > cap || v < -cap) return;
      c[static_cast<size_t>(i)] = v.convert_to<long long>();
      maxc = std::max(maxc, std::abs(c[static_cast<size_t>(i)]));
    }
    coords_.push_back(std::move(c));
  }
  denom_ = d;
  max_coord_ = maxc;
  int_cache_ = true;
}

VertexSet::MaxViolation VertexSet::max_violation(const LinearInequality& ineq) const {
  if (points.empty()) throw std::invalid_argument("empty vertex set");
  if (int_cache_) {
    auto scaled = scale_row(ineq.dense_row(horizon), ineq.rhs);
    if (scaled) {
      long long maxa = std::abs(scaled->b);
      for (long long a : scaled->a) maxa = std::max(maxa, std::abs(a));
      // |a . c| + |b * denom| must stay well inside int128
      const double guard = static_cast<double>(maxa) * static_cast<double>(max_coord_) *
                               static_cast<double>(horizon.dim()) +
                           static_cast<double>(maxa) * static_cast<double>(denom_);
      if (guard < 1e36) {
        __int128 best = 0;
        size_t arg = 0;
        bool first = true;
        const int dim = horizon.dim();
        for (size_t k = 0; k < coords_.size(); ++k) {
          __int128 acc = 0;
          const auto& c = coords_[k];
          for (int j = 0; j < dim; ++j)
            acc += static_cast<__int128>(scaled->a[static_cast<size_t>(j)]) * c[static_cast<size_t>(j)];
          acc -= static_cast<__int128>(scaled->b) * denom_;
          if (first || acc > best) {
            best = acc;
            arg = k;
            first = false;
          }
        }
        return {ineq.violation(points[arg]), arg};
      }
    }
  }
  Rational best = ineq.violation(points[0]);
  size_t arg = 0;
  for (size_t k = 1; k < points.size(); ++k) {
    Rational v = ineq.violation(points[k]);
    if (v > best) {
      best = std::move(v);
      arg = k;
    }
  }
  return {best, arg};
}

VertexSet feasible_vertex_superset(const GeneratorParams& p, const Horizon& h, int cap) {
  VertexSet vs(h);
  std::map<std::tuple<int, bool, bool>, std::vector<std::vector<Rational>>> memo;
  auto schedules = enumerate_schedules(p, h, cap);
  for (const auto& s : schedules) {
    auto runs = runs_of(s, h.T);
    std::vector<const std::vector<std::vector<Rational>>*> per_run;
    for (const auto& r : runs) {
      auto key = std::make_tuple(r.end - r.start + 1, r.start >= 2, r.end <= h.T - 1);
      auto it = memo.find(key);
      if (it == memo.end())
        it = memo.emplace(key, run_vertices(std::get<0>(key), std::get<1>(key), std::get<2>(key), p))
                 .first;
      per_run.push_back(&it->second);
    }
    std::vector<size_t> idx(runs.size(), 0);
    bool more = true;
    while (more) {
      std::vector<Rational> x(static_cast<size_t>(h.T), Rational(0));
      for (size_t k = 0; k < runs.size(); ++k) {
        const auto& rv = (*per_run[k])[idx[k]];
        for (int t = runs[k].start; t <= runs[k].end; ++t)
          x[static_cast<size_t>(t - 1)] = rv[static_cast<size_t>(t - runs[k].start)];
      }
      vs.points.push_back(point_from_schedule(s, x, h));
      vs.schedules.push_back(s);
      more = false;
      size_t k = runs.size();
      while (k > 0) {
        --k;
        if (++idx[k] < per_run[k]->size()) {
          more = true;
          break;
        }
        idx[k] = 0;
      }
    }
  }
  vs.build_int_cache();
  return vs;
}

std::pair<Rational, Point> max_violation(const LinearInequality& ineq, const GeneratorParams& p,
                                         const Horizon& h) {
  auto vs = feasible_vertex_superset(p, h);
  auto mv = vs.max_violation(ineq);
  return {mv.value, vs.points[mv.witness]};
}

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("affine_dimension needs points");
  std::vector<VectorR> vs;
  vs.reserve(points.size());
  for (const auto& p : points) vs.push_back(p.z);
  return affine_rank(vs);
}

FacetRank facet_rank(const LinearInequality& ineq, const VertexSet& verts) {
  FacetRank fr;
  auto mv = verts.max_violation(ineq);
  if (mv.value > 0) return fr;  // NOT_VALID
  fr.valid = true;
  std::vector<VectorR> tight;
  for (const auto& pt : verts.points)
    if (ineq.violation(pt) == 0) tight.push_back(pt.z);
  fr.rank = tight.empty() ? -1 : affine_rank(tight);
  return fr;
}

FacetRank facet_rank(const LinearInequality& ineq, const GeneratorParams& p, const Horizon& h) {
  auto vs = feasible_vertex_superset(p, h);
  return facet_rank(ineq, vs);
}

std::string to_string(HullCertificate::Verdict v) {
  switch (v) {
    case HullCertificate::Verdict::EQUAL: return "EQUAL";
    case HullCertificate::Verdict::Q_NOT_SUBSET: return "Q_NOT_SUBSET";
    case HullCertificate::Verdict::Q_NOT_SUPERSET: return "Q_NOT_SUPERSET";
    case HullCertificate::Verdict::UNBOUNDED: return "UNBOUNDED";
  }
  return "?";
}

namespace {

Point point_from_vector(const VectorR& v, const Horizon& h) {
  Point p(h);
  p.z = v;
  return p;
}

/// Trivial bound candidates as "a.z <= b" rows.
std::vector<LinearInequality> trivial_bounds(const Horizon& h) {
  std::vector<LinearInequality> out;
  auto push = [&](VarKey k, Rational coef, Rational rhs, const char* tag) {
    LinearInequality r;
    r.family = tag;
    r.add(k, coef);
    r.rhs = std::move(rhs);
    r.normalize();
    out.push_back(std::move(r));
  };
  for (int t = 1; t <= h.T; ++t) {
    push(X(t), -1, 0, "bound:x_nonneg");
    push(Y(t), -1, 0, "bound:y_nonneg");
    push(Y(t), 1, 1, "bound:y_cap");
  }
  for (int t = 2; t <= h.T; ++t) {
    push(U(t), -1, 0, "bound:u_nonneg");
    push(U(t), 1, 1, "bound:u_cap");
  }
  return out;
}

}  // namespace

HullCertificate certify_hull(const std::vector<LinearInequality>& system,
                             const GeneratorParams& p, const Horizon& h, int cap) {
  if (h.T > cap) throw std::invalid_argument("hull certification cap exceeded");
  HullCertificate cert;

  auto verts = feasible_vertex_superset(p, h);
  std::vector<VectorR> pts;
  pts.reserve(verts.points.size());
  for (const auto& q : verts.points) pts.push_back(q.z);
  cert.dim = affine_rank(pts);

  for (const auto& ineq : system) {
    auto mv = verts.max_violation(ineq);
    if (mv.value > 0) {
      cert.verdict = HullCertificate::Verdict::Q_NOT_SUPERSET;
      cert.witness_ineq = ineq;
      cert.witness_point = verts.points[mv.witness];
      cert.detail = "system row cuts off a feasible point: " + ineq.describe();
      return cert;
    }
  }

  const int dim = h.dim();
  LpModelT<Rational> lp;
  for (int j = 0; j < dim; ++j) lp.add_var(BoundT<Rational>::none(), BoundT<Rational>::none());
  auto to_lp_row = [&](const LinearInequality& r) {
    LpRowT<Rational> row;
    row.sense = RowSense::LE;
    row.rhs = r.rhs;
    for (const auto& [k, c] : r.coeffs) row.coeffs.emplace_back(h.index(k), c);
    return row;
  };
  for (const auto& r : system) lp.add_row(to_lp_row(r));

  // Append only those trivial bounds the system does not already imply.
  std::vector<LinearInequality> full = system;
  {
    SimplexSolver<Rational> solver(lp);
    for (const auto& b : trivial_bounds(h)) {
      std::vector<Rational> obj(static_cast<size_t>(dim), Rational(0));
      for (const auto& [k, c] : b.coeffs) obj[static_cast<size_t>(h.index(k))] = c;
      solver.set_objective(obj, ObjSense::MAX);
      auto sol = solver.solve();
      bool implied = sol.status == LpStatus::OPTIMAL && sol.objective <= b.rhs;
      if (!implied) full.push_back(b);
    }
  }

  LpModelT<Rational> lp_full;
  for (int j = 0; j < dim; ++j) lp_full.add_var(BoundT<Rational>::none(), BoundT<Rational>::none());
  for (const auto& r : full) lp_full.add_row(to_lp_row(r));
  {
    SimplexSolver<Rational> solver(lp_full);
    for (int j = 0; j < dim; ++j) {
      for (ObjSense sense : {ObjSense::MAX, ObjSense::MIN}) {
        std::vector<Rational> obj(static_cast<size_t>(dim), Rational(0));
        obj[static_cast<size_t>(j)] = 1;
        solver.set_objective(obj, sense);
        auto sol = solver.solve();
        if (sol.status == LpStatus::UNBOUNDED) {
          cert.verdict = HullCertificate::Verdict::UNBOUNDED;
          cert.ray = sol.ray;
          cert.detail = "candidate system is unbounded in coordinate " + std::to_string(j);
          return cert;
        }
      }
    }
  }

  std::vector<IntRow> int_rows;
  std::vector<VectorR> lhs;
  std::vector<Rational> rhs;
  bool ints_ok = true;
  for (const auto& r : full) {
    VectorR a = r.dense_row(h);
    if (ints_ok) {
      auto sr = scale_row(a, r.rhs);
      if (sr) int_rows.push_back(std::move(*sr));
      else ints_ok = false;
    }
    lhs.push_back(std::move(a));
    rhs.push_back(r.rhs);
  }
  std::vector<VectorR> qverts = ints_ok ? enumerate_h_vertices(int_rows, dim)
                                        : enumerate_h_vertices_rational(lhs, rhs, dim);
  cert.q_vertex_count = qverts.size();

  for (const auto& v : qverts) {
    Point q = point_from_vector(v, h);
    if (!is_feasible_point(q, p, h)) {
      cert.verdict = HullCertificate::Verdict::Q_NOT_SUBSET;
      cert.witness_point = q;
      cert.detail = "candidate system has a vertex outside the feasible set";
      return cert;
    }
  }
  cert.verdict = HullCertificate::Verdict::EQUAL;
  return cert;
}

}  // namespace ucpoly
