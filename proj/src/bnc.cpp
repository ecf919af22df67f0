#include "ucpoly/bnc.hpp"

#include <chrono>
#include <cmath>
#include <queue>

namespace ucpoly {

double integrality_gap(double z_lp, double z_milp, ObjSense sense) {
  if (sense == ObjSense::MAX) {
    if (z_lp == 0.0) throw std::invalid_argument("zero denominator in gap");
    return 100.0 * (z_lp - z_milp) / z_lp;
  }
  if (z_milp == 0.0) throw std::invalid_argument("zero denominator in gap");
  return 100.0 * (z_milp - z_lp) / z_milp;
}

double gap_reduction_percent(double igap_baseline, double igap_strong) {
  if (igap_baseline == 0.0) throw std::invalid_argument("zero baseline gap");
  return 100.0 * (igap_baseline - igap_strong) / igap_baseline;
}

void apply_cut_policy(MilpModel& model, CutPolicy policy) {
  model.policy = policy;
  model.cut_pool.clear();
  model.pool_gen.clear();
  model.callback_families.clear();
  if (policy == CutPolicy::NONE) return;

  const Horizon h(model.map.T);
  for (int g = 0; g < model.map.n_gens; ++g) {
    const auto& p = model.gens[static_cast<size_t>(g)];
    // two-period windows become hard rows
    for (int t = 2; t <= h.T; ++t)
      for (const auto& r : q2_system(p, h, t)) {
        LpRowT<double> row;
        row.sense = RowSense::LE;
        row.rhs = to_double(r.rhs);
        for (const auto& [k, c] : r.coeffs)
          row.coeffs.emplace_back(model.map.col(g, k), to_double(c));
        model.lp.add_row(std::move(row));
      }
    // three-period windows and the polynomial families feed the cut pool
    auto pool = [&](const LinearInequality& r) {
      model.cut_pool.push_back(r);
      model.pool_gen.push_back(g);
    };
    if (h.T >= 3) {
      const int Lw = std::min(p.min_up, 2);
      const int lw = std::min(p.min_down, 2);
      for (int t = 3; t <= h.T; ++t)
        for (const auto& r : q3_system(p, Lw, lw, h, t)) pool(r);
    }
    for (int k = 1; k <= ineq20_k_max(p); ++k)
      for (int t = k; t <= h.T - 1; ++t) pool(ineq20(p, h, t, k));
    if (p.startstop_ramp < p.c_min + p.ramp)
      for (int t = 2; t <= h.T; ++t)
        for (int m = 1; m <= ineq25_m_max(p, h, t); ++m) {
          auto [n_lo, n_hi] = ineq25_n_range(p, h, t, m);
          for (int n = n_lo; n <= n_hi; ++n)
            if (ineq25_26_condition(p, h, t, m, n, true)) pool(ineq25_26(p, h, t, m, n, {}));
        }
  }
  model.callback_families = {SepFamily::F21, SepFamily::F24, SepFamily::F26,
                             SepFamily::F27, SepFamily::F29, SepFamily::F30};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Branch {
  int col;
  double lo, up;
};

struct Node {
  double bound_score;  // internal MIN score of the parent relaxation
  long id;
  std::vector<Branch> path;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound_score != b.bound_score) return a.bound_score > b.bound_score;  // min-heap
    return a.id > b.id;
  }
};

class BncDriver {
 public:
  BncDriver(const MilpModel& model, const BncConfig& cfg)
      : model_(model), cfg_(cfg), solver_(model.lp), start_(Clock::now()) {
    dir_ = model_.lp.sense == ObjSense::MAX ? -1.0 : 1.0;
  }

  MilpResult run() {
    MilpResult res;
    auto root = solver_.solve();
    stats_.lp_iterations += root.iterations;
    if (root.status == LpStatus::INFEASIBLE) {
      stats_.status = MilpStatus::INFEASIBLE;
      finish(res);
      return res;
    }
    if (root.status != LpStatus::OPTIMAL) throw std::runtime_error("root relaxation failed");
    stats_.root_lp_initial = root.objective;

    run_root_cuts();
    auto after = solver_.solve();
    stats_.lp_iterations += after.iterations;
    stats_.root_lp_bound = after.objective;

    branch_and_bound(after);
    finish(res);
    return res;
  }

  SolveStats& stats() { return stats_; }
  VectorX<double> incumbent() const { return incumbent_; }

  int run_root_cuts() {
    int rounds = 0;
    double prev = 0.0;
    for (; rounds < cfg_.root_cut_rounds; ++rounds) {
      auto sol = solver_.solve();
      stats_.lp_iterations += sol.iterations;
      if (sol.status != LpStatus::OPTIMAL) break;
      double score = dir_ * sol.objective;  // cuts can only push this up
      if (rounds > 0 && score - prev < cfg_.min_bound_improve) break;
      prev = score;
      if (add_violated_cuts(sol) == 0) break;
    }
    stats_.root_cut_rounds = rounds;
    return rounds;
  }

  double lp_bound() {
    auto sol = solver_.solve();
    stats_.lp_iterations += sol.iterations;
    if (sol.status != LpStatus::OPTIMAL) throw std::runtime_error("relaxation not solvable");
    return sol.objective;
  }

 private:
  const MilpModel& model_;
  BncConfig cfg_;
  SimplexSolver<double> solver_;
  Clock::time_point start_;
  double dir_ = 1.0;
  SolveStats stats_;
  VectorX<double> incumbent_;
  double incumbent_score_ = 1e300;  // internal MIN score
  std::vector<Branch> applied_;
  std::vector<std::pair<int, LinearInequality>> added_cuts_;

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  PointD gen_point(const LpSolutionT<double>& sol, int g) const {
    Horizon h(model_.map.T);
    PointD pt(h);
    for (int t = 1; t <= h.T; ++t) {
      pt.x(t) = sol.primal[model_.map.x(g, t)];
      pt.y(t) = sol.primal[model_.map.y(g, t)];
    }
    for (int t = 2; t <= h.T; ++t) pt.u(t) = sol.primal[model_.map.u(g, t)];
    return pt;
  }

  LpRowT<double> to_row(const LinearInequality& r, int g) const {
    LpRowT<double> row;
    row.sense = RowSense::LE;
    row.rhs = to_double(r.rhs);
    for (const auto& [k, c] : r.coeffs)
      row.coeffs.emplace_back(model_.map.col(g, k), to_double(c));
    return row;
  }

  int add_violated_cuts(const LpSolutionT<double>& sol) {
    std::vector<LpRowT<double>> rows;
    // static pool scan
    for (size_t i = 0; i < model_.cut_pool.size(); ++i) {
      const auto& r = model_.cut_pool[i];
      int g = model_.pool_gen[i];
      PointD pt = gen_point(sol, g);
      if (r.violation(pt) > cfg_.cut_violation_tol) {
        rows.push_back(to_row(r, g));
        added_cuts_.emplace_back(g, r);
        ++stats_.cuts_added[r.family.substr(0, r.family.find(':'))];
      }
    }
    // separation callbacks
    Horizon h(model_.map.T);
    for (int g = 0; g < model_.map.n_gens; ++g) {
      PointD pt = gen_point(sol, g);
      for (auto fam : model_.callback_families) {
        auto res = separate_family<double>(pt, model_.gens[static_cast<size_t>(g)], h, fam,
                                           cfg_.cut_violation_tol);
        if (res.cut) {
          rows.push_back(to_row(*res.cut, g));
          added_cuts_.emplace_back(g, *res.cut);
          ++stats_.cuts_added[res.cut->family];
        }
      }
    }
    if (!rows.empty()) solver_.append_rows(rows);
    return static_cast<int>(rows.size());
  }

  void apply_path(const std::vector<Branch>& path) {
    for (const auto& b : applied_) {
      // restore the base bounds of previously branched columns
      solver_.set_var_bounds(b.col, model_.lp.lower[static_cast<size_t>(b.col)],
                             model_.lp.upper[static_cast<size_t>(b.col)], false);
    }
    for (const auto& b : path)
      solver_.set_var_bounds(b.col, BoundT<double>::at(b.lo), BoundT<double>::at(b.up), false);
    solver_.refresh_values();
    applied_ = path;
  }

  int pick_branch_var(const LpSolutionT<double>& sol) const {
    int best = -1;
    double best_frac = 1e-6;
    for (int col : model_.integer_vars) {
      double v = sol.primal[col];
      double frac = std::min(v - std::floor(v), std::ceil(v) - v);
      if (frac > best_frac + 1e-12) {
        best_frac = frac;
        best = col;
      }
    }
    return best;
  }

  bool integral(const LpSolutionT<double>& sol) const {
    for (int col : model_.integer_vars) {
      double v = sol.primal[col];
      if (std::abs(v - std::round(v)) > 1e-6) return false;
    }
    return true;
  }

  void offer_incumbent(const LpSolutionT<double>& sol) {
    double score = dir_ * sol.objective;
    if (score >= incumbent_score_ - 1e-12) return;
    // cut safety: a new incumbent must satisfy every cut added so far
    for (const auto& [g, r] : added_cuts_) {
      PointD pt = gen_point(sol, g);
      if (r.violation(pt) > 1e-6) return;
    }
    incumbent_score_ = score;
    incumbent_ = sol.primal;
    stats_.has_incumbent = true;
    stats_.best_objective = sol.objective;
  }

  void try_rounding_heuristic(const LpSolutionT<double>& sol) {
    Horizon h(model_.map.T);
    std::vector<Branch> fixes;
    for (int g = 0; g < model_.map.n_gens; ++g) {
      Schedule s;
      s.y.resize(static_cast<size_t>(h.T));
      s.u.resize(static_cast<size_t>(h.T - 1));
      for (int t = 1; t <= h.T; ++t)
        s.y[static_cast<size_t>(t - 1)] = sol.primal[model_.map.y(g, t)] >= 0.5 ? 1 : 0;
      for (int t = 2; t <= h.T; ++t)
        s.u[static_cast<size_t>(t - 2)] = std::max(0, s.yt(t) - s.yt(t - 1));
      if (!is_feasible_schedule(s, model_.gens[static_cast<size_t>(g)], h)) return;
      for (int t = 1; t <= h.T; ++t)
        fixes.push_back({model_.map.y(g, t), double(s.yt(t)), double(s.yt(t))});
      for (int t = 2; t <= h.T; ++t)
        fixes.push_back({model_.map.u(g, t), double(s.ut(t)), double(s.ut(t))});
    }
    auto saved = applied_;
    std::vector<Branch> combined = saved;
    combined.insert(combined.end(), fixes.begin(), fixes.end());
    apply_path(combined);
    auto sub = solver_.solve();
    stats_.lp_iterations += sub.iterations;
    if (sub.status == LpStatus::OPTIMAL && integral(sub)) offer_incumbent(sub);
    apply_path(saved);
  }

  void branch_and_bound(const LpSolutionT<double>& root_sol) {
    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long next_id = 0;
    double root_score = dir_ * root_sol.objective;

    if (integral(root_sol)) {
      offer_incumbent(root_sol);
      stats_.status = MilpStatus::OPTIMAL;
      stats_.terminating_gap_percent = 0.0;
      return;
    }
    try_rounding_heuristic(root_sol);
    open.push({root_score, next_id++, {}});

    double best_open_bound = root_score;
    bool hit_limit = false;
    while (!open.empty()) {
      if (stats_.nodes_explored >= cfg_.node_limit || elapsed() > cfg_.time_limit_sec) {
        hit_limit = true;
        break;
      }
      Node node = open.top();
      best_open_bound = node.bound_score;
      if (incumbent_score_ - best_open_bound <=
          cfg_.rel_tolerance * std::max(1.0, std::abs(incumbent_score_)))
        break;  // proven within tolerance
      open.pop();
      if (node.bound_score >= incumbent_score_ - 1e-12) continue;  // pruned

      apply_path(node.path);
      auto sol = solver_.solve();
      stats_.lp_iterations += sol.iterations;
      ++stats_.nodes_explored;
      if (sol.status != LpStatus::OPTIMAL) continue;  // infeasible subtree
      double score = dir_ * sol.objective;
      if (score >= incumbent_score_ - 1e-12) continue;

      if (static_cast<int>(node.path.size()) <= cfg_.tree_cut_depth && cfg_.tree_cut_rounds > 0) {
        for (int round = 0; round < cfg_.tree_cut_rounds; ++round) {
          if (add_violated_cuts(sol) == 0) break;
          sol = solver_.solve();
          stats_.lp_iterations += sol.iterations;
          if (sol.status != LpStatus::OPTIMAL) break;
        }
        if (sol.status != LpStatus::OPTIMAL) continue;
        score = dir_ * sol.objective;
        if (score >= incumbent_score_ - 1e-12) continue;
      }

      if (integral(sol)) {
        offer_incumbent(sol);
        continue;
      }
      if (cfg_.heuristic_every > 0 && stats_.nodes_explored % cfg_.heuristic_every == 0)
        try_rounding_heuristic(sol);

      int col = pick_branch_var(sol);
      if (col < 0) {
        offer_incumbent(sol);
        continue;
      }
      double v = sol.primal[col];
      Node down{score, next_id++, node.path};
      down.path.push_back({col, std::floor(v), std::floor(v)});
      Node up{score, next_id++, node.path};
      up.path.push_back({col, std::ceil(v), std::ceil(v)});
      open.push(std::move(down));
      open.push(std::move(up));
    }

    (void)best_open_bound;
    double bound = open.empty() ? incumbent_score_
                                : std::min(open.top().bound_score, incumbent_score_);
    if (stats_.has_incumbent) {
      double denom = std::max(1e-9, std::abs(incumbent_score_));
      stats_.terminating_gap_percent = 100.0 * (incumbent_score_ - bound) / denom;
      bool within = stats_.terminating_gap_percent <= 100.0 * cfg_.rel_tolerance + 1e-12;
      stats_.status = (!hit_limit || within) ? MilpStatus::OPTIMAL : MilpStatus::LIMIT;
    } else {
      stats_.status = hit_limit ? MilpStatus::LIMIT : MilpStatus::INFEASIBLE;
    }
  }

  void finish(MilpResult& res) {
    stats_.wallclock_sec = elapsed();
    if (stats_.has_incumbent) {
      try {
        stats_.integrality_gap_percent =
            integrality_gap(stats_.root_lp_bound, stats_.best_objective, model_.lp.sense);
      } catch (const std::invalid_argument&) {
        stats_.integrality_gap_percent = 0.0;
      }
      res.incumbent = incumbent_;
    }
    res.stats = stats_;
  }
};

}  // namespace

MilpResult solve_milp(const MilpModel& model, const BncConfig& config) {
  BncDriver driver(model, config);
  return driver.run();
}

RootCutResult root_cut_loop(const MilpModel& model, const BncConfig& config) {
  RootCutResult out;
  BncDriver driver(model, config);
  out.bound_before = driver.lp_bound();
  out.rounds = driver.run_root_cuts();
  out.bound_after = driver.lp_bound();
  out.cuts_by_family = driver.stats().cuts_added;
  return out;
}

}  // namespace ucpoly
