#pragma once

#include "ucpoly/separation.hpp"
#include "ucpoly/simplex.hpp"

#include <map>
#include <memory>
#include <string>

namespace ucpoly {

// ---------------------------------------------------------------------------
// MILP driver: LP-relaxation best-bound search with a static cut pool and
// per-generator separation callbacks.
// ---------------------------------------------------------------------------

/// Column layout of a unit-commitment MILP: per-generator (x, y, u) blocks
/// first, then any auxiliary columns (cost segments).
struct VarMap {
  int n_gens = 0;
  int T = 0;

  int block() const { return 3 * T - 1; }
  int x(int g, int t) const { return g * block() + (t - 1); }
  int y(int g, int t) const { return g * block() + T + (t - 1); }
  int u(int g, int t) const { return g * block() + 2 * T + (t - 2); }
  int col(int g, const VarKey& k) const {
    switch (k.kind) {
      case Var::X: return x(g, k.t);
      case Var::Y: return y(g, k.t);
      case Var::U: return u(g, k.t);
    }
    return -1;
  }
};

enum class CutPolicy { NONE, STRONG };

struct MilpModel {
  LpModelT<double> lp;
  VarMap map;
  std::vector<GeneratorParams> gens;
  std::vector<int> integer_vars;  // the y and u columns
  std::string name;

  CutPolicy policy = CutPolicy::NONE;
  std::vector<LinearInequality> cut_pool;   // (generator, row) pairs, see pool_gen
  std::vector<int> pool_gen;
  std::vector<SepFamily> callback_families;
};

/// Applies a cut policy: STRONG appends the two-period window systems as
/// constraints, loads three-period windows plus the polynomial families into
/// the cut pool, and enables separation for the exponential families.
void apply_cut_policy(MilpModel& model, CutPolicy policy);

struct BncConfig {
  double rel_tolerance = 1e-4;   // 0.01 %
  long node_limit = 200000;
  double time_limit_sec = 60.0;
  int root_cut_rounds = 50;
  int tree_cut_rounds = 1;
  int tree_cut_depth = 3;        // separation disabled below this depth
  double cut_violation_tol = 1e-6;
  double min_bound_improve = 1e-9;
  std::uint64_t seed = 0;
  bool deterministic = true;
  int heuristic_every = 16;      // rounding heuristic cadence (nodes)
};

enum class MilpStatus { OPTIMAL, LIMIT, INFEASIBLE };

struct SolveStats {
  MilpStatus status = MilpStatus::INFEASIBLE;
  double root_lp_initial = 0.0;   // relaxation bound before any cuts
  double root_lp_bound = 0.0;     // relaxation bound after the root cut loop
  double best_objective = 0.0;    // Z_MILP
  bool has_incumbent = false;
  double integrality_gap_percent = 0.0;  // from root_lp_bound vs best
  double terminating_gap_percent = 0.0;  // bound vs incumbent at stop
  long nodes_explored = 0;
  long lp_iterations = 0;
  int root_cut_rounds = 0;
  std::map<std::string, long> cuts_added;
  double wallclock_sec = 0.0;
};

struct MilpResult {
  SolveStats stats;
  VectorX<double> incumbent;  // full column vector (empty if none)
};

MilpResult solve_milp(const MilpModel& model, const BncConfig& config);

/// Root tightening only: LP solve + separation rounds. Returns the stats of
/// the loop and leaves the added cuts in `added`.
struct RootCutResult {
  double bound_before = 0.0;
  double bound_after = 0.0;
  int rounds = 0;
  std::map<std::string, long> cuts_by_family;
};
RootCutResult root_cut_loop(const MilpModel& model, const BncConfig& config);

/// Sense-aware integrality gap in percent. MAX: (lp-milp)/lp; MIN: (milp-lp)/milp.
double integrality_gap(double z_lp, double z_milp, ObjSense sense);

/// (IGap_baseline - IGap_strong) / IGap_baseline in percent.
double gap_reduction_percent(double igap_baseline, double igap_strong);

}  // namespace ucpoly
