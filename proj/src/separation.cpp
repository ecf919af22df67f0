#include "ucpoly/separation.hpp"

#include <algorithm>
#include <limits>

namespace ucpoly {

namespace {

template <typename Scalar>
Scalar sc(const Rational& q) {
  return static_cast<Scalar>(q);
}
template <>
double sc<double>(const Rational& q) {
  return to_double(q);
}

long posl(long v) { return v > 0 ? v : 0; }

// y_i - sum_{j=0}^{cap} u_{i-j} at the candidate point (u clamped to [2, T])
template <typename Scalar>
Scalar eval_D(const PointT<Scalar>& pt, int i, int cap) {
  const int T = pt.horizon.T;
  Scalar v = pt.y(i);
  for (int j = 0; j <= cap; ++j) {
    int idx = i - j;
    if (idx >= 2 && idx <= T) v -= pt.u(idx);
  }
  return v;
}

template <typename Scalar>
Scalar eval_u(const PointT<Scalar>& pt, int i) {
  const int T = pt.horizon.T;
  if (i >= 2 && i <= T) return pt.u(i);
  return Scalar(0);
}

template <typename Scalar>
struct Builder {
  const PointT<Scalar>& pt;
  const GeneratorParams& p;
  const Horizon& h;
  int L, T;
  Scalar C, Cb, V, Vb;

  Builder(const PointT<Scalar>& point, const GeneratorParams& gp, const Horizon& hz)
      : pt(point), p(gp), h(hz), L(gp.min_up), T(hz.T), C(sc<Scalar>(gp.c_min)),
        Cb(sc<Scalar>(gp.c_max)), V(sc<Scalar>(gp.ramp)), Vb(sc<Scalar>(gp.startstop_ramp)) {}

  // phi of the backward single-variable family
  Scalar phi21(int t) const {
    Scalar acc(0);
    for (int k = 1; k <= t + L - T - 1; ++k) acc += V * Scalar(k) * eval_u(pt, t - k);
    for (int k = static_cast<int>(posl(t + L - T)); k <= L - 1; ++k)
      acc += V * Scalar(std::min(L - 1 - k, k)) * eval_u(pt, t - k);
    return acc;
  }
  // phi of the forward families (single and three variable)
  Scalar phi24(int t) const {
    Scalar acc(0);
    for (int k = 1; k <= t + L - T - 1; ++k) acc += V * Scalar(k) * eval_u(pt, t - k);
    for (int k = static_cast<int>(posl(t + L - T)); k <= std::min(L - 1, t - 2); ++k)
      acc += V * Scalar(std::min(L - 1 - k, k)) * eval_u(pt, t - k);
    return acc;
  }
  // phi of the two-variable ramp-up family (m-capped windows)
  Scalar phi25(int t, int m) const {
    Scalar acc(0);
    for (int k = 1; k <= std::min(t + L - T - 1, m - 1); ++k)
      acc += V * Scalar(k) * eval_u(pt, t - k);
    for (int k = static_cast<int>(posl(t + L - T)); k <= std::min(L - 1, m - 1); ++k)
      acc += V * Scalar(std::min(L - 1 - k, k)) * eval_u(pt, t - k);
    return acc;
  }

  SeparationGraph<Scalar> graph21(int t, int m, int n) const {
    SeparationGraph<Scalar> g;
    // nodes: 0=o, 1=r, 2..m+2 = t, t-1, ..., t-m, m+3 = d
    g.n_nodes = m + 4;
    g.time_of_node.assign(static_cast<size_t>(g.n_nodes), -1);
    auto node_of = [&](int s) { return 2 + (t - s); };
    for (int s = t - m; s <= t; ++s) g.time_of_node[static_cast<size_t>(node_of(s))] = s;
    const int d = g.n_nodes - 1;

    g.arcs.push_back({0, 1, Vb * pt.y(t) - pt.x(t)});
    Scalar mid(0);
    for (int k = 1; k <= posl(n - 1); ++k) mid += V * eval_D(pt, t + k, L - 1);
    const Scalar Dn = eval_D(pt, t + n, L - 1);
    for (int s = t - m; s <= t; ++s)
      g.arcs.push_back({1, node_of(s), mid + Scalar(L - 1 + t - s - posl(n - 1)) * V * Dn});
    for (int t1 = t; t1 > t - m; --t1) {
      const Scalar D1 = eval_D(pt, t1, L - 1);
      for (int t2 = t1 - 1; t2 >= t - m; --t2)
        g.arcs.push_back({node_of(t1), node_of(t2), Scalar(t1 - t2) * V * D1});
    }
    const Scalar beta = Cb - Vb - Scalar(m + L - 1) * V;
    g.arcs.push_back({node_of(t - m), d, beta * eval_D(pt, t - m, L - 1) + phi21(t)});
    return g;
  }

  SeparationGraph<Scalar> graph26(int t, int m, int n) const {
    const int lo = t - m + L;
    SeparationGraph<Scalar> g;
    g.n_nodes = (t - lo + 1) + 3;
    g.time_of_node.assign(static_cast<size_t>(g.n_nodes), -1);
    auto node_of = [&](int s) { return 2 + (t - s); };
    for (int s = lo; s <= t; ++s) g.time_of_node[static_cast<size_t>(node_of(s))] = s;
    const int d = g.n_nodes - 1;

    g.arcs.push_back(
        {0, 1, Vb * pt.y(t) - pt.x(t) + pt.x(t - m) - C * pt.y(t - m) + phi25(t, m)});
    Scalar mid(0);
    for (int k = 1; k <= posl(n - 1); ++k)
      mid += V * eval_D(pt, t + k, std::min(L - 1, k + m - 1));
    const Scalar Dn = eval_D(pt, t + n, std::min(L - 1, n + m - 1));
    for (int s = lo; s <= t; ++s) {
      Scalar beta = Scalar(m - 1 - (s - lo) - posl(n - 1));
      Scalar w = mid + beta * V * Dn +
                 (C + V - Vb) * eval_D(pt, s, std::min(L - 1, s - (t - m) - 1));
      g.arcs.push_back({1, node_of(s), w});
    }
    for (int t1 = t; t1 > lo; --t1) {
      const Scalar D1 = eval_D(pt, t1, L - 1);
      for (int t2 = t1 - 1; t2 >= lo; --t2)
        g.arcs.push_back({node_of(t1), node_of(t2), Scalar(t1 - t2) * V * D1});
    }
    g.arcs.push_back({node_of(lo), d, Scalar(0)});
    return g;
  }

  SeparationGraph<Scalar> graph24(int t, int m) const {
    const int t_hat = ineq24_t_hat(p, t);
    SeparationGraph<Scalar> g;
    const int first = t_hat, last = t + m + 1;
    g.n_nodes = (last - first + 1) + 2;
    g.time_of_node.assign(static_cast<size_t>(g.n_nodes), -1);
    auto node_of = [&](int s) { return 1 + (s - first); };
    for (int s = first; s <= last; ++s) g.time_of_node[static_cast<size_t>(node_of(s))] = s;
    const int d = g.n_nodes - 1;

    Scalar head = Vb * pt.y(t) - pt.x(t);
    for (int i = t + 1; i <= t_hat - 1; ++i) head += V * eval_D(pt, i, std::min(L - 1, i - 2));
    g.arcs.push_back({0, node_of(first), head});
    for (int t1 = first; t1 < last; ++t1) {
      const Scalar D1 = eval_D(pt, t1, L - 1);
      for (int t2 = t1 + 1; t2 <= last; ++t2)
        g.arcs.push_back({node_of(t1), node_of(t2), Scalar(t2 - t1) * V * D1});
    }
    g.arcs.push_back(
        {node_of(last), d, (Cb - Vb - Scalar(m) * V) * eval_D(pt, last, L - 1) + phi24(t)});
    return g;
  }

  SeparationGraph<Scalar> graph27(int t, int m) const {
    const int t_tld = std::min(ineq24_t_hat(p, t), t + m);
    SeparationGraph<Scalar> g;
    const int first = t_tld, last = t + m;
    g.n_nodes = (last - first + 1) + 2;
    g.time_of_node.assign(static_cast<size_t>(g.n_nodes), -1);
    auto node_of = [&](int s) { return 1 + (s - first); };
    for (int s = first; s <= last; ++s) g.time_of_node[static_cast<size_t>(node_of(s))] = s;
    const int d = g.n_nodes - 1;

    Scalar head = Vb * pt.y(t) - pt.x(t) + pt.x(t + m) - C * pt.y(t + m) + phi24(t);
    for (int i = t + 1; i <= t_tld - 1; ++i) head += V * eval_D(pt, i, std::min(L - 1, i - 2));
    g.arcs.push_back({0, node_of(first), head});
    for (int t1 = first; t1 < last; ++t1) {
      const Scalar D1 = eval_D(pt, t1, L - 1);
      for (int t2 = t1 + 1; t2 <= last; ++t2)
        g.arcs.push_back({node_of(t1), node_of(t2), Scalar(t2 - t1) * V * D1});
    }
    for (int i = first; i <= last; ++i) {
      Scalar w = (C + V - Vb) * eval_D(pt, i, std::min(L - 1, i - 2));
      if (i < last) w += Scalar(last - i) * V * eval_D(pt, i, L - 1);
      g.arcs.push_back({node_of(i), d, w});
    }
    return g;
  }

  SeparationGraph<Scalar> graph29(int t, int m) const {
    auto [s_lo, s_hi] = ineq29_s_band(p, t, m);
    SeparationGraph<Scalar> g;
    // nodes: o, r, band descending, t-m (unless already <= s_hi layout), d
    std::vector<int> times;
    for (int s = s_hi; s >= s_lo; --s) times.push_back(s);
    times.push_back(t - m);
    g.n_nodes = static_cast<int>(times.size()) + 3;
    g.time_of_node.assign(static_cast<size_t>(g.n_nodes), -1);
    auto node_of = [&](int s) {
      if (s == t - m) return static_cast<int>(times.size()) + 1;
      return 2 + (s_hi - s);
    };
    for (int s : times) g.time_of_node[static_cast<size_t>(node_of(s))] = s;
    const int d = g.n_nodes - 1;

    Scalar head = Vb * pt.y(t - 2) - (Vb - V) * pt.y(t - 1) + Vb * pt.y(t) -
                  (pt.x(t - 2) - pt.x(t - 1) + pt.x(t));
    for (int k = 3; k <= L - 1; ++k) head += Scalar(k - 2) * V * eval_u(pt, t - k);
    if (L == 2) {  // rhs carries -phi
      Rational coef = p.c_min + p.ramp - p.startstop_ramp;
      if (coef > 0) head -= sc<Scalar>(coef) * eval_u(pt, t - 2);
    }
    g.arcs.push_back({0, 1, head});
    const Scalar Dt = eval_D(pt, t, L - 1);
    for (int s : times) {
      Scalar alpha = Scalar(posl(m + L - 3) - (s - (t - m)));
      g.arcs.push_back({1, node_of(s), alpha * V * Dt});
    }
    for (size_t a = 0; a < times.size(); ++a) {
      const Scalar D1 = eval_D(pt, times[a], L - 1);
      for (size_t b = a + 1; b < times.size(); ++b)
        g.arcs.push_back({node_of(times[a]), node_of(times[b]),
                          Scalar(times[a] - times[b]) * V * D1});
    }
    const Scalar beta = Cb - Vb - Scalar(posl(m + L - 3)) * V;
    g.arcs.push_back({node_of(t - m), d, beta * eval_D(pt, t - m, L - 1)});
    return g;
  }

  SeparationGraph<Scalar> graph30(int t, int m) const {
    const int t_hat = std::max(t + 1, L + 1);
    SeparationGraph<Scalar> g;
    const int first = t_hat, last = t + m + 1;
    g.n_nodes = (last - first + 1) + 2;
    g.time_of_node.assign(static_cast<size_t>(g.n_nodes), -1);
    auto node_of = [&](int s) { return 1 + (s - first); };
    for (int s = first; s <= last; ++s) g.time_of_node[static_cast<size_t>(node_of(s))] = s;
    const int d = g.n_nodes - 1;

    Scalar head = Vb * pt.y(t - 2) - (Vb - V) * pt.y(t - 1) + Vb * pt.y(t) -
                  (pt.x(t - 2) - pt.x(t - 1) + pt.x(t));
    for (int i = t + 1; i <= t_hat - 1; ++i) head += V * eval_D(pt, i, std::min(L - 1, i - 2));
    for (int k = 3; k <= std::min(t - 2, L - 1); ++k) head += Scalar(k - 2) * V * eval_u(pt, t - k);
    g.arcs.push_back({0, node_of(first), head});
    for (int t1 = first; t1 < last; ++t1) {
      const Scalar D1 = eval_D(pt, t1, L - 1);
      for (int t2 = t1 + 1; t2 <= last; ++t2)
        g.arcs.push_back({node_of(t1), node_of(t2), Scalar(t2 - t1) * V * D1});
    }
    g.arcs.push_back(
        {node_of(last), d, (Cb - Vb - Scalar(m) * V) * eval_D(pt, last, L - 1)});
    return g;
  }
};

template <typename Scalar>
std::vector<int> visited_times(const SeparationGraph<Scalar>& g, const std::vector<int>& nodes) {
  std::vector<int> out;
  for (int n : nodes) {
    int tm = g.time_of_node[static_cast<size_t>(n)];
    if (tm >= 0) out.push_back(tm);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

template <typename Scalar>
ShortestPath<Scalar> shortest_path(const SeparationGraph<Scalar>& g) {
  const int n = g.n_nodes;
  std::vector<Scalar> dist(static_cast<size_t>(n), Scalar(0));
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> pred(static_cast<size_t>(n), -1);
  seen[0] = 1;
  // arcs are emitted with from-nodes in topological order
  for (const auto& a : g.arcs) {
    if (!seen[static_cast<size_t>(a.from)]) continue;
    Scalar cand = dist[static_cast<size_t>(a.from)] + a.weight;
    if (!seen[static_cast<size_t>(a.to)] || cand < dist[static_cast<size_t>(a.to)] ||
        (cand == dist[static_cast<size_t>(a.to)] && a.from < pred[static_cast<size_t>(a.to)])) {
      seen[static_cast<size_t>(a.to)] = 1;
      dist[static_cast<size_t>(a.to)] = cand;
      pred[static_cast<size_t>(a.to)] = a.from;
    }
  }
  ShortestPath<Scalar> sp;
  if (!seen[static_cast<size_t>(n - 1)]) return sp;
  sp.reachable = true;
  sp.cost = dist[static_cast<size_t>(n - 1)];
  for (int v = n - 1; v != -1; v = pred[static_cast<size_t>(v)]) sp.nodes.push_back(v);
  std::reverse(sp.nodes.begin(), sp.nodes.end());
  return sp;
}

template <typename Scalar>
SeparationGraph<Scalar> build_graph_21(const PointT<Scalar>& pt, const GeneratorParams& p,
                                       const Horizon& h, int t, int m, int n) {
  if (t < p.min_up + 1 || t > h.T || m < 0 || m > ineq21_m_max(p, h, t))
    throw std::domain_error("tuple outside the family band");
  auto [n_lo, n_hi] = ineq21_n_range(p, h, t);
  if (n < n_lo || n > n_hi) throw std::domain_error("tuple outside the family band");
  return Builder<Scalar>(pt, p, h).graph21(t, m, n);
}

namespace {

template <typename Scalar>
struct TupleCut {
  Scalar violation;
  LinearInequality row;
  std::vector<int> s;
  int t, m, n;
};

/// Runs fn(t, m, n) over the admissible tuple set of a family; n = 0 for the
/// families without an n index.
void for_each_tuple(const GeneratorParams& p, const Horizon& h, SepFamily fam,
                    const std::function<void(int, int, int)>& fn) {
  const int T = h.T;
  const int L = p.min_up;
  switch (fam) {
    case SepFamily::F21:
      for (int t = L + 1; t <= T; ++t) {
        auto [n_lo, n_hi] = ineq21_n_range(p, h, t);
        for (int m = 0; m <= ineq21_m_max(p, h, t); ++m)
          for (int n = n_lo; n <= n_hi; ++n)
            if (ineq21_condition(p, h, t, n)) fn(t, m, n);
      }
      break;
    case SepFamily::F24:
      for (int t = 1; t <= T - 1; ++t) {
        auto [m_lo, m_hi] = ineq24_m_range(p, h, t);
        for (int m = m_lo; m <= m_hi; ++m) fn(t, m, 0);
      }
      break;
    case SepFamily::F26:
      if (!(p.startstop_ramp < p.c_min + p.ramp)) return;
      for (int t = 2; t <= T; ++t)
        for (int m = std::max(1, L); m <= ineq25_m_max(p, h, t); ++m) {
          auto [n_lo, n_hi] = ineq25_n_range(p, h, t, m);
          for (int n = n_lo; n <= n_hi; ++n)
            if (ineq25_26_condition(p, h, t, m, n, false)) fn(t, m, n);
        }
      break;
    case SepFamily::F27:
      if (!(p.startstop_ramp < p.c_min + p.ramp)) return;
      for (int t = 1; t <= T - 1; ++t)
        for (int m = 1; m <= ineq27_m_max(p, h, t); ++m) fn(t, m, 0);
      break;
    case SepFamily::F29:
      if (L < 2) return;
      for (int t = L + 1; t <= T; ++t) {
        auto [m_lo, m_hi] = ineq29_m_range(p, h, t);
        for (int m = m_lo; m <= m_hi; ++m) fn(t, m, 0);
      }
      break;
    case SepFamily::F30:
      if (!(p.startstop_ramp < p.c_min + p.ramp)) return;
      for (int t = 3; t <= T - 1; ++t) {
        auto [m_lo, m_hi] = ineq30_m_range(p, h, t);
        for (int m = m_lo; m <= m_hi; ++m) fn(t, m, 0);
      }
      break;
  }
}

LinearInequality rebuild_row(const GeneratorParams& p, const Horizon& h, SepFamily fam, int t,
                             int m, int n, const std::vector<int>& s) {
  switch (fam) {
    case SepFamily::F21: {
      std::vector<int> S;
      for (int i : s)
        if (i != t - m) S.push_back(i);
      return ineq21(p, h, t, m, n, S);
    }
    case SepFamily::F24: {
      const int t_hat = ineq24_t_hat(p, t);
      std::vector<int> S;
      for (int i : s)
        if (i != t_hat && i != t + m + 1) S.push_back(i);
      return ineq24(p, h, t, m, S);
    }
    case SepFamily::F26:
      return ineq25_26(p, h, t, m, n, s);
    case SepFamily::F27: {
      const int t_tld = std::min(ineq24_t_hat(p, t), t + m);
      std::vector<int> S1;
      for (int i : s)
        if (i != t_tld) S1.push_back(i);
      return ineq27(p, h, t, m, S1);
    }
    case SepFamily::F29: {
      std::vector<int> S;
      for (int i : s)
        if (i != t - m) S.push_back(i);
      return ineq29(p, h, t, m, S);
    }
    case SepFamily::F30: {
      const int t_hat = std::max(t + 1, p.min_up + 1);
      std::vector<int> S;
      for (int i : s)
        if (i != t_hat && i != t + m + 1) S.push_back(i);
      return ineq30(p, h, t, m, S);
    }
  }
  throw std::logic_error("unknown family");
}

}  // namespace

template <typename Scalar>
SeparationResult<Scalar> separate_family(const PointT<Scalar>& pt, const GeneratorParams& p,
                                         const Horizon& h, SepFamily family,
                                         const Scalar& violation_tolerance) {
  SeparationResult<Scalar> res;
  Builder<Scalar> b(pt, p, h);
  bool have = false;
  for_each_tuple(p, h, family, [&](int t, int m, int n) {
    SeparationGraph<Scalar> g;
    switch (family) {
      case SepFamily::F21: g = b.graph21(t, m, n); break;
      case SepFamily::F24: g = b.graph24(t, m); break;
      case SepFamily::F26: g = b.graph26(t, m, n); break;
      case SepFamily::F27: g = b.graph27(t, m); break;
      case SepFamily::F29: g = b.graph29(t, m); break;
      case SepFamily::F30: g = b.graph30(t, m); break;
    }
    ++res.graphs_built;
    res.arcs_total += g.arc_count();
    auto sp = shortest_path(g);
    if (!sp.reachable) return;
    Scalar viol = -sp.cost;
    if (!have || viol > res.best_violation) {
      have = true;
      res.best_violation = viol;
      res.t = t;
      res.m = m;
      res.n = n;
      res.chosen_s = visited_times(g, sp.nodes);
    }
  });
  if (have && res.best_violation > violation_tolerance) {
    res.cut = rebuild_row(p, h, family, res.t, res.m, res.n, res.chosen_s);
    res.chosen_s = res.cut->set_s;
  }
  return res;
}

template <typename Scalar>
SeparationResult<Scalar> brute_force_separate(const PointT<Scalar>& pt, const GeneratorParams& p,
                                              const Horizon& h, SepFamily family,
                                              const Scalar& violation_tolerance, int band_cap) {
  SeparationResult<Scalar> res;
  bool have = false;
  auto consider = [&](const LinearInequality& row, int t, int m, int n) {
    Scalar viol = row.violation(pt);
    if (!have || viol > res.best_violation) {
      have = true;
      res.best_violation = viol;
      res.cut = row;
      res.chosen_s = row.set_s;
      res.t = t;
      res.m = m;
      res.n = n;
    }
  };
  auto subsets = [&](int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
    int len = std::max(0, hi - lo + 1);
    if (len > band_cap) throw std::domain_error("band too large for brute force");
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      std::vector<int> s;
      for (int bnum = 0; bnum < len; ++bnum)
        if (mask & (1u << bnum)) s.push_back(lo + bnum);
      fn(s);
    }
  };
  for_each_tuple(p, h, family, [&](int t, int m, int n) {
    switch (family) {
      case SepFamily::F21:
        subsets(t - m + 1, t, [&](const std::vector<int>& s) { consider(ineq21(p, h, t, m, n, s), t, m, n); });
        break;
      case SepFamily::F24: {
        const int t_hat = ineq24_t_hat(p, t);
        subsets(t_hat + 1, t + m, [&](const std::vector<int>& s) { consider(ineq24(p, h, t, m, s), t, m, n); });
        break;
      }
      case SepFamily::F26:
        subsets(t - m + p.min_up, t, [&](const std::vector<int>& s) {
          if (s.empty()) return;
          consider(ineq25_26(p, h, t, m, n, s), t, m, n);
        });
        break;
      case SepFamily::F27: {
        const int t_tld = std::min(ineq24_t_hat(p, t), t + m);
        subsets(t_tld + 1, t + m, [&](const std::vector<int>& s1) { consider(ineq27(p, h, t, m, s1), t, m, n); });
        break;
      }
      case SepFamily::F29: {
        auto [s_lo, s_hi] = ineq29_s_band(p, t, m);
        subsets(s_lo, s_hi, [&](const std::vector<int>& s) { consider(ineq29(p, h, t, m, s), t, m, n); });
        break;
      }
      case SepFamily::F30: {
        const int t_hat = std::max(t + 1, p.min_up + 1);
        subsets(t_hat + 1, t + m, [&](const std::vector<int>& s) { consider(ineq30(p, h, t, m, s), t, m, n); });
        break;
      }
    }
  });
  if (!(have && res.best_violation > violation_tolerance)) res.cut.reset();
  return res;
}

template struct SeparationGraph<double>;
template struct SeparationGraph<Rational>;
template ShortestPath<double> shortest_path(const SeparationGraph<double>&);
template ShortestPath<Rational> shortest_path(const SeparationGraph<Rational>&);
template SeparationGraph<double> build_graph_21(const PointT<double>&, const GeneratorParams&,
                                                const Horizon&, int, int, int);
template SeparationGraph<Rational> build_graph_21(const PointT<Rational>&, const GeneratorParams&,
                                                  const Horizon&, int, int, int);
template SeparationResult<double> separate_family(const PointT<double>&, const GeneratorParams&,
                                                  const Horizon&, SepFamily, const double&);
template SeparationResult<Rational> separate_family(const PointT<Rational>&, const GeneratorParams&,
                                                    const Horizon&, SepFamily, const Rational&);
template SeparationResult<double> brute_force_separate(const PointT<double>&,
                                                       const GeneratorParams&, const Horizon&,
                                                       SepFamily, const double&, int);
template SeparationResult<Rational> brute_force_separate(const PointT<Rational>&,
                                                         const GeneratorParams&, const Horizon&,
                                                         SepFamily, const Rational&, int);

}  // namespace ucpoly
