#pragma once

#include "ucpoly/rational.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cassert>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucpoly {

// ---------------------------------------------------------------------------
// Bounded-variable revised simplex over a generic scalar. Scalar = double is
// the solver-loop mode (tolerances, refactorization); Scalar = Rational is
// the certification mode (exact arithmetic, Bland's rule throughout).
//
// Internal form: structural columns x and one logical column per row, tied by
// [A | -I] z = 0. Row senses live in the logical bounds, so the rhs vector is
// identically zero and appending rows never touches existing columns.
// ---------------------------------------------------------------------------

enum class RowSense { LE, EQ, GE };
enum class ObjSense { MIN, MAX };
enum class LpStatus { OPTIMAL, INFEASIBLE, UNBOUNDED, ITER_LIMIT };

template <typename Scalar>
struct BoundT {
  bool finite = false;
  Scalar value = Scalar(0);

  static BoundT none() { return {false, Scalar(0)}; }
  static BoundT at(const Scalar& v) { return {true, v}; }
};

template <typename Scalar>
struct LpRowT {
  std::vector<std::pair<int, Scalar>> coeffs;  // (structural var, coefficient)
  RowSense sense = RowSense::LE;
  Scalar rhs = Scalar(0);
};

template <typename Scalar>
struct LpModelT {
  int n_vars = 0;
  std::vector<BoundT<Scalar>> lower, upper;
  std::vector<LpRowT<Scalar>> rows;
  ObjSense sense = ObjSense::MIN;
  std::vector<Scalar> cost;  // dense, length n_vars

  int add_var(BoundT<Scalar> lo, BoundT<Scalar> up, const Scalar& c = Scalar(0)) {
    lower.push_back(lo);
    upper.push_back(up);
    cost.push_back(c);
    return n_vars++;
  }
  void add_row(LpRowT<Scalar> row) { rows.push_back(std::move(row)); }
};

template <typename Scalar>
struct LpSolutionT {
  LpStatus status = LpStatus::INFEASIBLE;
  VectorX<Scalar> primal;   // structural values
  VectorX<Scalar> row_dual; // one multiplier per row
  Scalar objective = Scalar(0);
  VectorX<Scalar> ray;      // structural direction when UNBOUNDED
  long iterations = 0;
};

template <typename Scalar>
struct LpTraits;

template <>
struct LpTraits<double> {
  static constexpr bool exact = false;
  static double feas_tol() { return 1e-9; }
  static double dual_tol() { return 1e-9; }
  static double pivot_tol() { return 1e-10; }
  static bool is_pos(double v, double tol) { return v > tol; }
  static bool is_neg(double v, double tol) { return v < -tol; }
};

template <>
struct LpTraits<Rational> {
  static constexpr bool exact = true;
  static Rational feas_tol() { return 0; }
  static Rational dual_tol() { return 0; }
  static Rational pivot_tol() { return 0; }
  static bool is_pos(const Rational& v, const Rational&) { return v > 0; }
  static bool is_neg(const Rational& v, const Rational&) { return v < 0; }
};

template <typename Scalar>
class SimplexSolver {
  using Traits = LpTraits<Scalar>;

 public:
  long refactor_every = 100;   // FLOAT mode only
  long iteration_limit = 2'000'000;

  explicit SimplexSolver(const LpModelT<Scalar>& model) { reset(model); }

  void reset(const LpModelT<Scalar>& model) {
    n_ = model.n_vars;
    m_ = static_cast<int>(model.rows.size());
    sense_ = model.sense;
    cols_.assign(static_cast<size_t>(n_ + m_), {});
    lo_.assign(static_cast<size_t>(n_ + m_), BoundT<Scalar>::none());
    up_.assign(static_cast<size_t>(n_ + m_), BoundT<Scalar>::none());
    cost_.assign(static_cast<size_t>(n_ + m_), Scalar(0));
    for (int j = 0; j < n_; ++j) {
      lo_[static_cast<size_t>(j)] = model.lower[static_cast<size_t>(j)];
      up_[static_cast<size_t>(j)] = model.upper[static_cast<size_t>(j)];
      cost_[static_cast<size_t>(j)] = model.sense == ObjSense::MAX
                                          ? Scalar(-model.cost[static_cast<size_t>(j)])
                                          : model.cost[static_cast<size_t>(j)];
    }
    for (int i = 0; i < m_; ++i) install_row(i, model.rows[static_cast<size_t>(i)]);
    basis_valid_ = false;
  }

  /// Appends rows, keeping the current basis when one exists (new logicals
  /// enter the basis).
  void append_rows(const std::vector<LpRowT<Scalar>>& rows) {
    for (const auto& row : rows) {
      int i = m_++;
      // logical columns live at the tail, so appending keeps all indices
      cols_.emplace_back();
      lo_.push_back(BoundT<Scalar>::none());
      up_.push_back(BoundT<Scalar>::none());
      cost_.push_back(Scalar(0));
      install_row(i, row);
      if (basis_valid_) {
        basic_.push_back(n_ + i);
        state_.push_back(State::Basic);
        value_.push_back(Scalar(0));
      }
    }
    if (basis_valid_) rebuild_from_basis();
  }

  /// Replaces the bounds of a structural variable (branching). The basis is
  /// kept; the next solve repairs any resulting infeasibility. Callers doing
  /// batches pass recompute = false and finish with refresh_values().
  void set_var_bounds(int var, BoundT<Scalar> lo, BoundT<Scalar> up, bool recompute = true) {
    lo_[static_cast<size_t>(var)] = lo;
    up_[static_cast<size_t>(var)] = up;
    if (!basis_valid_) return;
    if (state_[static_cast<size_t>(var)] == State::AtLo) {
      if (lo.finite) value_[static_cast<size_t>(var)] = lo.value;
      else if (up.finite) { state_[static_cast<size_t>(var)] = State::AtUp; value_[static_cast<size_t>(var)] = up.value; }
      else { state_[static_cast<size_t>(var)] = State::Free; value_[static_cast<size_t>(var)] = Scalar(0); }
    } else if (state_[static_cast<size_t>(var)] == State::AtUp) {
      if (up.finite) value_[static_cast<size_t>(var)] = up.value;
      else if (lo.finite) { state_[static_cast<size_t>(var)] = State::AtLo; value_[static_cast<size_t>(var)] = lo.value; }
      else { state_[static_cast<size_t>(var)] = State::Free; value_[static_cast<size_t>(var)] = Scalar(0); }
    }
    if (basis_valid_ && recompute) recompute_basic_values();
  }

  /// Recomputes basic values after a batch of bound changes.
  void refresh_values() {
    if (basis_valid_) recompute_basic_values();
  }

  LpSolutionT<Scalar> solve() {
    LpSolutionT<Scalar> sol;
    iterations_ = 0;
    if (!basis_valid_) cold_start();
    else recompute_basic_values();

    if (!repair_feasibility(sol)) return sol;  // INFEASIBLE or ITER_LIMIT

    LpStatus st = price_and_pivot(cost_, /*phase1=*/false, sol);
    sol.status = st;
    sol.iterations = iterations_;
    if (st != LpStatus::OPTIMAL) return sol;
    extract(sol);
    return sol;
  }

  /// Swaps in a new structural objective, keeping the basis (warm phase 2).
  void set_objective(const std::vector<Scalar>& structural_cost, ObjSense sense) {
    sense_ = sense;
    for (int j = 0; j < n_; ++j)
      cost_[static_cast<size_t>(j)] = sense == ObjSense::MAX
                                          ? Scalar(-structural_cost[static_cast<size_t>(j)])
                                          : structural_cost[static_cast<size_t>(j)];
    for (int i = 0; i < m_; ++i) cost_[static_cast<size_t>(n_ + i)] = Scalar(0);
  }

  int rows() const { return m_; }
  int vars() const { return n_; }

  /// Structural solution of the last optimal solve (valid while basis holds).
  Scalar var_value(int j) const { return value_[static_cast<size_t>(j)]; }

 private:
  enum class State : std::uint8_t { Basic, AtLo, AtUp, Free };

  int n_ = 0, m_ = 0;
  ObjSense sense_ = ObjSense::MIN;
  std::vector<std::vector<std::pair<int, Scalar>>> cols_;  // column -> (row, coef), logicals = -e_i
  std::vector<BoundT<Scalar>> lo_, up_;
  std::vector<Scalar> cost_;

  bool basis_valid_ = false;
  std::vector<int> basic_;            // basis column per row position
  std::vector<State> state_;          // per column
  std::vector<Scalar> value_;         // per column
  MatrixX<Scalar> binv_;
  long iterations_ = 0;
  long pivots_since_refactor_ = 0;
  long stalled_ = 0;

  void install_row(int i, const LpRowT<Scalar>& row) {
    for (const auto& [j, c] : row.coeffs)
      if (c != Scalar(0)) cols_[static_cast<size_t>(j)].emplace_back(i, c);
    cols_[static_cast<size_t>(n_ + i)] = {{i, Scalar(-1)}};
    switch (row.sense) {
      case RowSense::LE:
        lo_[static_cast<size_t>(n_ + i)] = BoundT<Scalar>::none();
        up_[static_cast<size_t>(n_ + i)] = BoundT<Scalar>::at(row.rhs);
        break;
      case RowSense::GE:
        lo_[static_cast<size_t>(n_ + i)] = BoundT<Scalar>::at(row.rhs);
        up_[static_cast<size_t>(n_ + i)] = BoundT<Scalar>::none();
        break;
      case RowSense::EQ:
        lo_[static_cast<size_t>(n_ + i)] = BoundT<Scalar>::at(row.rhs);
        up_[static_cast<size_t>(n_ + i)] = BoundT<Scalar>::at(row.rhs);
        break;
    }
  }

  void cold_start() {
    state_.assign(static_cast<size_t>(n_ + m_), State::AtLo);
    value_.assign(static_cast<size_t>(n_ + m_), Scalar(0));
    for (int j = 0; j < n_; ++j) set_nonbasic_start(j);
    basic_.resize(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      basic_[static_cast<size_t>(i)] = n_ + i;
      state_[static_cast<size_t>(n_ + i)] = State::Basic;
    }
    binv_ = -MatrixX<Scalar>::Identity(m_, m_);  // B = -I
    basis_valid_ = true;
    recompute_basic_values();
  }

  void set_nonbasic_start(int j) {
    if (lo_[static_cast<size_t>(j)].finite) {
      state_[static_cast<size_t>(j)] = State::AtLo;
      value_[static_cast<size_t>(j)] = lo_[static_cast<size_t>(j)].value;
    } else if (up_[static_cast<size_t>(j)].finite) {
      state_[static_cast<size_t>(j)] = State::AtUp;
      value_[static_cast<size_t>(j)] = up_[static_cast<size_t>(j)].value;
    } else {
      state_[static_cast<size_t>(j)] = State::Free;
      value_[static_cast<size_t>(j)] = Scalar(0);
    }
  }

  VectorX<Scalar> column_dense(int j) const {
    VectorX<Scalar> c = VectorX<Scalar>::Zero(m_);
    for (const auto& [i, v] : cols_[static_cast<size_t>(j)]) c[i] = v;
    return c;
  }

  void refactorize() {
    MatrixX<Scalar> B(m_, m_);
    B.setZero();
    for (int i = 0; i < m_; ++i) {
      for (const auto& [r, v] : cols_[static_cast<size_t>(basic_[static_cast<size_t>(i)])])
        B(r, i) = v;
    }
    if constexpr (Traits::exact) {
      // dense exact inverse via Gauss-Jordan
      MatrixX<Scalar> inv = MatrixX<Scalar>::Identity(m_, m_);
      MatrixX<Scalar> A = B;
      for (int c = 0; c < m_; ++c) {
        int p = -1;
        for (int r = c; r < m_; ++r)
          if (A(r, c) != Scalar(0)) { p = r; break; }
        if (p < 0) throw std::runtime_error("singular basis");
        A.row(c).swap(A.row(p));
        inv.row(c).swap(inv.row(p));
        Scalar d = A(c, c);
        A.row(c) /= d;
        inv.row(c) /= d;
        for (int r = 0; r < m_; ++r) {
          if (r == c) continue;
          Scalar f = A(r, c);
          if (f != Scalar(0)) {
            A.row(r) -= f * A.row(c);
            inv.row(r) -= f * inv.row(c);
          }
        }
      }
      binv_ = std::move(inv);
    } else {
      binv_ = B.partialPivLu().inverse();
    }
    pivots_since_refactor_ = 0;
  }

  void rebuild_from_basis() {
    state_.resize(static_cast<size_t>(n_ + m_), State::AtLo);
    value_.resize(static_cast<size_t>(n_ + m_), Scalar(0));
    refactorize();
    recompute_basic_values();
  }

  void recompute_basic_values() {
    VectorX<Scalar> rhs = VectorX<Scalar>::Zero(m_);
    for (int j = 0; j < n_ + m_; ++j) {
      if (state_[static_cast<size_t>(j)] == State::Basic) continue;
      const Scalar& v = value_[static_cast<size_t>(j)];
      if (v == Scalar(0)) continue;
      for (const auto& [i, c] : cols_[static_cast<size_t>(j)]) rhs[i] -= c * v;
    }
    VectorX<Scalar> xb = binv_.lazyProduct(rhs);
    for (int i = 0; i < m_; ++i) value_[static_cast<size_t>(basic_[static_cast<size_t>(i)])] = xb[i];
  }

  Scalar infeasibility() const {
    Scalar total(0);
    for (int i = 0; i < m_; ++i) {
      int j = basic_[static_cast<size_t>(i)];
      const Scalar& v = value_[static_cast<size_t>(j)];
      if (lo_[static_cast<size_t>(j)].finite && v < lo_[static_cast<size_t>(j)].value)
        total += lo_[static_cast<size_t>(j)].value - v;
      if (up_[static_cast<size_t>(j)].finite && v > up_[static_cast<size_t>(j)].value)
        total += v - up_[static_cast<size_t>(j)].value;
    }
    return total;
  }

  /// Phase 1: minimize the sum of bound violations of basic variables
  /// (composite objective, re-priced every iteration).
  bool repair_feasibility(LpSolutionT<Scalar>& sol) {
    const Scalar ftol = Traits::feas_tol();
    while (true) {
      Scalar inf = infeasibility();
      if (inf <= ftol) return true;
      if (iterations_ >= iteration_limit) {
        sol.status = LpStatus::ITER_LIMIT;
        return false;
      }
      // phase-1 cost on basics outside their bounds
      VectorX<Scalar> cb = VectorX<Scalar>::Zero(m_);
      for (int i = 0; i < m_; ++i) {
        int j = basic_[static_cast<size_t>(i)];
        const Scalar& v = value_[static_cast<size_t>(j)];
        if (lo_[static_cast<size_t>(j)].finite && v < lo_[static_cast<size_t>(j)].value) cb[i] = Scalar(-1);
        else if (up_[static_cast<size_t>(j)].finite && v > up_[static_cast<size_t>(j)].value) cb[i] = Scalar(1);
      }
      VectorX<Scalar> y = binv_.transpose().lazyProduct(cb);
      int q = -1;
      int dir = 0;
      for (int j = 0; j < n_ + m_; ++j) {
        if (state_[static_cast<size_t>(j)] == State::Basic) continue;
        Scalar d(0);
        for (const auto& [i, c] : cols_[static_cast<size_t>(j)]) d -= y[i] * c;  // d_j = -y'a_j (c_j = 0)
        bool can_up = state_[static_cast<size_t>(j)] != State::AtUp;
        bool can_dn = state_[static_cast<size_t>(j)] != State::AtLo;
        if (can_up && Traits::is_neg(d, Traits::dual_tol())) { q = j; dir = +1; break; }
        if (can_dn && Traits::is_pos(d, Traits::dual_tol())) { q = j; dir = -1; break; }
      }
      if (q < 0) {
        sol.status = LpStatus::INFEASIBLE;
        return false;
      }
      if (!phase1_step(q, dir)) {
        sol.status = LpStatus::INFEASIBLE;  // no movement possible
        return false;
      }
      ++iterations_;
      if (!Traits::exact && ++pivots_since_refactor_ >= refactor_every) {
        refactorize();
        recompute_basic_values();
      }
    }
  }

  /// One phase-1 ratio step: entering q moves in direction dir; basics block
  /// at the first bound they reach *toward feasibility*; infeasible basics
  /// block when they regain their violated bound.
  bool phase1_step(int q, int dir) {
    VectorX<Scalar> w = binv_.lazyProduct(column_dense(q));
    const Scalar ptol = Traits::pivot_tol();

    bool have_theta = false;
    Scalar theta(0);
    int leave_pos = -1;       // basis position that blocks, -1 = bound flip
    bool leave_at_up = false;

    // entering variable's own opposite bound
    const auto& elo = lo_[static_cast<size_t>(q)];
    const auto& eup = up_[static_cast<size_t>(q)];
    if (dir > 0 && eup.finite) {
      theta = eup.value - value_[static_cast<size_t>(q)];
      have_theta = true;
    } else if (dir < 0 && elo.finite) {
      theta = value_[static_cast<size_t>(q)] - elo.value;
      have_theta = true;
    }

    const Scalar ftol = Traits::feas_tol();
    for (int i = 0; i < m_; ++i) {
      int j = basic_[static_cast<size_t>(i)];
      Scalar rate = Scalar(-dir) * w[i];  // d value_j / d theta
      if (!Traits::is_pos(rate, ptol) && !Traits::is_neg(rate, ptol)) continue;
      const Scalar& v = value_[static_cast<size_t>(j)];
      const auto& jlo = lo_[static_cast<size_t>(j)];
      const auto& jup = up_[static_cast<size_t>(j)];
      Scalar cand;
      bool cand_up;
      if (Traits::is_pos(rate, ptol)) {
        // moving up: an infeasible-below basic blocks when it regains its
        // lower bound, a feasible one at its upper bound; an infeasible-above
        // basic moving further up never blocks (the pricing already paid it)
        if (jlo.finite && v < jlo.value - ftol) { cand = (jlo.value - v) / rate; cand_up = false; }
        else if (jup.finite && v <= jup.value + ftol) { cand = (jup.value - v) / rate; cand_up = true; }
        else continue;
      } else {
        Scalar down = -rate;
        if (jup.finite && v > jup.value + ftol) { cand = (v - jup.value) / down; cand_up = true; }
        else if (jlo.finite && v >= jlo.value - ftol) { cand = (v - jlo.value) / down; cand_up = false; }
        else continue;
      }
      if (cand < Scalar(0)) cand = Scalar(0);
      if (!have_theta || cand < theta ||
          (cand == theta && leave_pos >= 0 && j < basic_[static_cast<size_t>(leave_pos)])) {
        have_theta = true;
        theta = cand;
        leave_pos = i;
        leave_at_up = cand_up;
      }
    }

    if (!have_theta) return false;  // unbounded infeasibility direction: should not happen
    apply_step(q, dir, theta, leave_pos, leave_at_up, w);
    return true;
  }

  /// Phase-2 pricing loop over a fixed cost vector.
  LpStatus price_and_pivot(const std::vector<Scalar>& cost, bool phase1, LpSolutionT<Scalar>& sol) {
    (void)phase1;
    bool bland = Traits::exact;
    long degenerate_run = 0;
    while (true) {
      if (iterations_ >= iteration_limit) return LpStatus::ITER_LIMIT;
      VectorX<Scalar> cb(m_);
      for (int i = 0; i < m_; ++i) cb[i] = cost[static_cast<size_t>(basic_[static_cast<size_t>(i)])];
      VectorX<Scalar> y = binv_.transpose().lazyProduct(cb);

      int q = -1;
      int dir = 0;
      Scalar best(0);
      for (int j = 0; j < n_ + m_; ++j) {
        State st = state_[static_cast<size_t>(j)];
        if (st == State::Basic) continue;
        Scalar d = cost[static_cast<size_t>(j)];
        for (const auto& [i, c] : cols_[static_cast<size_t>(j)]) d -= y[i] * c;
        bool up_ok = st == State::AtLo || st == State::Free;
        bool dn_ok = st == State::AtUp || st == State::Free;
        if (up_ok && Traits::is_neg(d, Traits::dual_tol())) {
          if (bland) { q = j; dir = +1; break; }
          if (q < 0 || -d > best) { q = j; dir = +1; best = -d; }
        } else if (dn_ok && Traits::is_pos(d, Traits::dual_tol())) {
          if (bland) { q = j; dir = -1; break; }
          if (q < 0 || d > best) { q = j; dir = -1; best = d; }
        }
      }
      if (q < 0) return LpStatus::OPTIMAL;

      VectorX<Scalar> w = binv_.lazyProduct(column_dense(q));
      const Scalar ptol = Traits::pivot_tol();
      bool have_theta = false;
      Scalar theta(0);
      int leave_pos = -1;
      bool leave_at_up = false;

      const auto& elo = lo_[static_cast<size_t>(q)];
      const auto& eup = up_[static_cast<size_t>(q)];
      if (dir > 0 && eup.finite) { theta = eup.value - value_[static_cast<size_t>(q)]; have_theta = true; }
      else if (dir < 0 && elo.finite) { theta = value_[static_cast<size_t>(q)] - elo.value; have_theta = true; }

      for (int i = 0; i < m_; ++i) {
        int j = basic_[static_cast<size_t>(i)];
        Scalar rate = Scalar(-dir) * w[i];
        if (!Traits::is_pos(rate, ptol) && !Traits::is_neg(rate, ptol)) continue;
        const Scalar& v = value_[static_cast<size_t>(j)];
        Scalar cand;
        bool cand_up;
        if (Traits::is_pos(rate, ptol)) {
          if (!up_[static_cast<size_t>(j)].finite) continue;
          cand = (up_[static_cast<size_t>(j)].value - v) / rate;
          cand_up = true;
        } else {
          if (!lo_[static_cast<size_t>(j)].finite) continue;
          cand = (v - lo_[static_cast<size_t>(j)].value) / (-rate);
          cand_up = false;
        }
        if (cand < Scalar(0)) cand = Scalar(0);
        if (!have_theta || cand < theta ||
            (cand == theta && leave_pos >= 0 && j < basic_[static_cast<size_t>(leave_pos)])) {
          have_theta = true;
          theta = cand;
          leave_pos = i;
          leave_at_up = cand_up;
        }
      }

      if (!have_theta) {
        sol.status = LpStatus::UNBOUNDED;
        sol.ray = VectorX<Scalar>::Zero(n_);
        if (q < n_) sol.ray[q] = Scalar(dir);
        for (int i = 0; i < m_; ++i) {
          int j = basic_[static_cast<size_t>(i)];
          if (j < n_) sol.ray[j] = Scalar(-dir) * w[i];
        }
        if (sense_ == ObjSense::MAX) { /* direction unchanged */ }
        return LpStatus::UNBOUNDED;
      }

      if (theta == Scalar(0)) ++degenerate_run;
      else degenerate_run = 0;
      if (!Traits::exact && degenerate_run > 200) bland = true;  // anti-cycling fallback
      else if (!Traits::exact && degenerate_run == 0) bland = false;

      apply_step(q, dir, theta, leave_pos, leave_at_up, w);
      ++iterations_;
      if (!Traits::exact && ++pivots_since_refactor_ >= refactor_every) {
        refactorize();
        recompute_basic_values();
      }
    }
  }

  void apply_step(int q, int dir, const Scalar& theta, int leave_pos, bool leave_at_up,
                  const VectorX<Scalar>& w) {
    if (theta != Scalar(0)) {
      for (int i = 0; i < m_; ++i)
        value_[static_cast<size_t>(basic_[static_cast<size_t>(i)])] += Scalar(-dir) * theta * w[i];
      value_[static_cast<size_t>(q)] += Scalar(dir) * theta;
    }
    if (leave_pos < 0) {
      // bound flip: entering variable stays nonbasic at the opposite bound
      state_[static_cast<size_t>(q)] = dir > 0 ? State::AtUp : State::AtLo;
      if (state_[static_cast<size_t>(q)] == State::AtUp) value_[static_cast<size_t>(q)] = up_[static_cast<size_t>(q)].value;
      else value_[static_cast<size_t>(q)] = lo_[static_cast<size_t>(q)].value;
      return;
    }
    int leaving = basic_[static_cast<size_t>(leave_pos)];
    state_[static_cast<size_t>(leaving)] = leave_at_up ? State::AtUp : State::AtLo;
    value_[static_cast<size_t>(leaving)] = leave_at_up ? up_[static_cast<size_t>(leaving)].value
                                                       : lo_[static_cast<size_t>(leaving)].value;
    basic_[static_cast<size_t>(leave_pos)] = q;
    state_[static_cast<size_t>(q)] = State::Basic;

    // pivot update of B^{-1}
    const Scalar piv = w[leave_pos];
    binv_.row(leave_pos) /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == leave_pos) continue;
      const Scalar f = w[i];
      if (f != Scalar(0)) binv_.row(i) -= f * binv_.row(leave_pos);
    }
  }

  void extract(LpSolutionT<Scalar>& sol) {
    sol.primal = VectorX<Scalar>::Zero(n_);
    for (int j = 0; j < n_; ++j) sol.primal[j] = value_[static_cast<size_t>(j)];
    VectorX<Scalar> cb(m_);
    for (int i = 0; i < m_; ++i) cb[i] = cost_[static_cast<size_t>(basic_[static_cast<size_t>(i)])];
    VectorX<Scalar> y = binv_.transpose().lazyProduct(cb);
    sol.row_dual = VectorX<Scalar>::Zero(m_);
    for (int i = 0; i < m_; ++i)
      sol.row_dual[i] = sense_ == ObjSense::MAX ? Scalar(-y[i]) : y[i];
    Scalar obj(0);
    for (int j = 0; j < n_; ++j) obj += cost_[static_cast<size_t>(j)] * sol.primal[j];
    sol.objective = sense_ == ObjSense::MAX ? Scalar(-obj) : obj;
  }
};

enum class LpMode { FLOAT, EXACT };

LpSolutionT<Rational> solve_lp_exact(const LpModelT<Rational>& model);
LpSolutionT<double> solve_lp_float(const LpModelT<double>& model);
LpModelT<double> to_float_model(const LpModelT<Rational>& model);

/// Plain-text dump of a model for external cross-checking (fixed format).
std::string lp_format(const LpModelT<double>& model, const std::vector<std::string>& names = {});

}  // namespace ucpoly
