#pragma once

#include "ucpoly/model.hpp"

#include <functional>
#include <vector>

namespace ucpoly {

// ---------------------------------------------------------------------------
// Closed-form constructors for the strong valid inequality families, each
// gated by its parameter regime and index bands. Constructors throw
// std::domain_error outside their stated domain. facet_claimed carries the
// family's facet condition evaluated at the given indices.
// ---------------------------------------------------------------------------

/// Two-period system on the window (t-1, t); the two ramp rows are dropped
/// when c_max - c_min - ramp < 0. 9 rows (7 without the ramp pair).
std::vector<LinearInequality> q2_system(const GeneratorParams& p, const Horizon& h, int t = 2);

/// Three-period system on the window (t-2, t-1, t) for window limits
/// min_up_w, min_down_w in {1, 2}; the row list depends on the parameter
/// regime (classify) following the three-period hull results.
std::vector<LinearInequality> q3_system(const GeneratorParams& p, int min_up_w, int min_down_w,
                                        const Horizon& h, int t = 3);

// --- single continuous variable ---

/// x_t bounded by the start-up window behind t and the commitment at t+1.
/// Domain: 1 <= k <= min{L, floor((cmax-vbar)/V) + 2}, t in [k, T-1].
LinearInequality ineq20(const GeneratorParams& p, const Horizon& h, int t, int k);
int ineq20_k_max(const GeneratorParams& p);

/// Exponential family bounding x_t via start-ups before t (set S) and the
/// commitment pattern after t. enforce_condition gates construction on the
/// stated validity/facet condition (2n >= L-1 whenever n <= T-t-1).
LinearInequality ineq21(const GeneratorParams& p, const Horizon& h, int t, int m, int n,
                        const std::vector<int>& S, bool enforce_condition = true);
int ineq21_m_max(const GeneratorParams& p, const Horizon& h, int t);
std::pair<int, int> ineq21_n_range(const GeneratorParams& p, const Horizon& h, int t);
bool ineq21_condition(const GeneratorParams& p, const Horizon& h, int t, int n);

/// Exponential family bounding x_t via the shut-down pattern after t.
LinearInequality ineq24(const GeneratorParams& p, const Horizon& h, int t, int m,
                        const std::vector<int>& S);
int ineq24_t_hat(const GeneratorParams& p, int t);
std::pair<int, int> ineq24_m_range(const GeneratorParams& p, const Horizon& h, int t);

// --- two continuous variables (require vbar < cmin + ramp) ---

/// Ramp-up family bounding x_t - x_{t-m}; S empty selects the closed form,
/// nonempty S the exponential form. Conditions (i)/(ii) gate construction.
LinearInequality ineq25_26(const GeneratorParams& p, const Horizon& h, int t, int m, int n,
                           const std::vector<int>& S, bool enforce_condition = true);
int ineq25_m_max(const GeneratorParams& p, const Horizon& h, int t);
std::pair<int, int> ineq25_n_range(const GeneratorParams& p, const Horizon& h, int t, int m);
bool ineq25_26_condition(const GeneratorParams& p, const Horizon& h, int t, int m, int n,
                         bool s_empty);

/// Ramp-down family bounding x_t - x_{t+m}; S1 is the optional part of the
/// index set (the anchor min{t_hat, t+m} always belongs to it).
LinearInequality ineq27(const GeneratorParams& p, const Horizon& h, int t, int m,
                        const std::vector<int>& S1);
int ineq27_m_max(const GeneratorParams& p, const Horizon& h, int t);

// --- three continuous variables ---

/// Fixed-size row on x_{t-2} - x_{t-1} + x_t (requires vbar < cmin + ramp,
/// L >= 2); facet-defining iff L <= 3.
LinearInequality ineq28(const GeneratorParams& p, const Horizon& h, int t);

/// Backward-looking exponential family on x_{t-2} - x_{t-1} + x_t (L >= 2).
LinearInequality ineq29(const GeneratorParams& p, const Horizon& h, int t, int m,
                        const std::vector<int>& S);
std::pair<int, int> ineq29_m_range(const GeneratorParams& p, const Horizon& h, int t);
std::pair<int, int> ineq29_s_band(const GeneratorParams& p, int t, int m);

/// Forward-looking exponential family on x_{t-2} - x_{t-1} + x_t.
LinearInequality ineq30(const GeneratorParams& p, const Horizon& h, int t, int m,
                        const std::vector<int>& S);
std::pair<int, int> ineq30_m_range(const GeneratorParams& p, const Horizon& h, int t);

/// Three facet families for the wide start-up regime
/// (vbar > cmin + ramp, cmax - cmin - ramp > 0, cmax - vbar - ramp > 0).
std::vector<LinearInequality> extra_vbar_ge(const GeneratorParams& p, const Horizon& h);

// --- sweep/catalog support ---

struct FamilySpec {
  std::string tag;
  std::string description;
  std::string index_domain;
  std::string case_gate;
  std::string facet_condition;
};
std::vector<FamilySpec> family_catalog();

/// Emits every row of every family admissible for these parameters, with
/// exponential S-bands capped at band_cap elements (all subsets). Used by
/// validity sweeps and static-cut generation.
void for_each_family_row(const GeneratorParams& p, const Horizon& h, int band_cap,
                         const std::function<void(const LinearInequality&)>& fn);

}  // namespace ucpoly
