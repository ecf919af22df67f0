#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ucpoly/cut_families.hpp"
#include "ucpoly/hull_oracle.hpp"

#include <random>

using namespace ucpoly;

namespace {

GeneratorParams gen1(int min_up = 1, int min_down = 1) {
  return make_params(150, 455, 91, 180, min_up, min_down);
}

// small integer parameter draw landing in the requested regime; nondegenerate
// draws avoid the coincidences where facet claims are documented to collapse
GeneratorParams draw_params(std::mt19937_64& rng, ParamCase want, TwoVRegime reg, int L, int l,
                            bool nondegenerate = false) {
  std::uniform_int_distribution<long> d(0, 40);
  for (int tries = 0; tries < 200000; ++tries) {
    long C = d(rng) % 21;         // 0..20
    long V = 1 + d(rng) % 12;     // 1..12
    long Vb = C + d(rng) % 25;    // >= C
    long Cb = Vb + d(rng) % 31;   // >= Vb
    if (!(C <= Vb && Vb <= Cb)) continue;
    if (nondegenerate &&
        (Cb - C - 2 * V == 0 || Cb - Vb - V == 0 || Vb == C || C + V == Vb || C == 0))
      continue;
    auto p = make_params(C, Cb, V, Vb, L, l);
    auto info = classify(p);
    if (info.case_id == want && info.reg_2v == reg) return p;
  }
  throw std::runtime_error("no parameter draw found");
}

}  // namespace

TEST_CASE("two-period system row counts") {
  Horizon h2(2);
  auto rows = q2_system(gen1(), h2);
  CHECK(rows.size() == 9);

  auto narrow = make_params(10, 13, 4, 12);  // cmax - cmin - ramp < 0
  CHECK(q2_system(narrow, h2).size() == 7);

  // sliding window re-indexing stays valid on a longer horizon
  Horizon h4(4);
  auto p = gen1();
  auto vs = feasible_vertex_superset(p, h4);
  for (int t = 2; t <= 4; ++t)
    for (const auto& r : q2_system(p, h4, t)) CHECK(vs.max_violation(r).value <= 0);
}

TEST_CASE("two-period hull certification") {
  Horizon h2(2);
  auto cert = certify_hull(q2_system(gen1(), h2), gen1(), h2);
  CHECK(cert.verdict == HullCertificate::Verdict::EQUAL);
  CHECK(cert.dim == 5);

  auto narrow = make_params(10, 13, 4, 12);
  auto cert2 = certify_hull(q2_system(narrow, h2), narrow, h2);
  CHECK(cert2.verdict == HullCertificate::Verdict::EQUAL);

  // dropping the first-period upper bound row must break equality
  auto rows = q2_system(gen1(), h2);
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const LinearInequality& r) { return r.family == "q2:x1_ub"; }),
             rows.end());
  auto cert3 = certify_hull(rows, gen1(), h2);
  CHECK(cert3.verdict != HullCertificate::Verdict::EQUAL);
  CHECK(cert3.witness_point.has_value());
}

TEST_CASE("three-period hull certification per regime") {
  Horizon h3(3);
  std::mt19937_64 rng(7);

  struct Combo {
    ParamCase pc;
    TwoVRegime reg;
  };
  std::vector<Combo> combos = {
      {ParamCase::Case1, TwoVRegime::GE}, {ParamCase::Case1, TwoVRegime::LT},
      {ParamCase::Case2, TwoVRegime::LT}, {ParamCase::Case3, TwoVRegime::LT},
      {ParamCase::Case4, TwoVRegime::GE}, {ParamCase::Case5, TwoVRegime::GE},
      {ParamCase::Case5, TwoVRegime::LT},
  };
  for (const auto& combo : combos) {
    for (int Lw : {1, 2})
      for (int lw : {1, 2}) {
        auto p = draw_params(rng, combo.pc, combo.reg, Lw, lw);
        CAPTURE(to_string(combo.pc));
        CAPTURE(to_string(combo.reg));
        CAPTURE(Lw);
        CAPTURE(lw);
        auto cert = certify_hull(q3_system(p, Lw, lw, h3), p, h3);
        CHECK(cert.verdict == HullCertificate::Verdict::EQUAL);
        CHECK(cert.dim == 8);
      }
  }

  // the named generator: Case 1, wide regime
  auto cert = certify_hull(q3_system(gen1(2, 2), 2, 2, h3), gen1(2, 2), h3);
  CHECK(cert.verdict == HullCertificate::Verdict::EQUAL);
}

TEST_CASE("window upper bound family (trailing start-ups)") {
  auto p = gen1(8, 8);
  Horizon h(24);
  CHECK(ineq20_k_max(p) == 5);  // min{8, floor(275/91) + 2}

  auto r = ineq20(p, h, 10, 4);
  // x10 <= 180 y10 + 275 (y11 - u11) - sum_{s=1}^{3} (275 - (s-1) 91) u_{10-s+1}
  LinearInequality want;
  want.add(X(10), 1);
  want.add(Y(10), -180);
  want.add(Y(11), -275);
  want.add(U(11), 275);
  want.add(U(10), 275);
  want.add(U(9), 275 - 91);
  want.add(U(8), 275 - 182);
  want.normalize();
  CHECK(r.coeffs == want.coeffs);
  CHECK(r.rhs == 0);

  // k = 1 reduces to the two-period bound shifted to (t, t+1)
  auto r1 = ineq20(p, h, 10, 1);
  LinearInequality base;
  base.add(X(10), 1);
  base.add(Y(10), -180);
  base.add(Y(11), -275);
  base.add(U(11), 275);
  base.normalize();
  CHECK(r1.coeffs == base.coeffs);

  // fractional violation example: y_t = 1, y_{t+1} = u_{t+1} = 1/2, x_t = cmax
  PointD frac(h);
  frac.y(10) = 1;
  frac.y(11) = 0.5;
  frac.x(10) = 455;
  CHECK(r1.violation(frac) == doctest::Approx(275.0 - 275.0 / 2));

  CHECK_THROWS(ineq20(p, h, 24, 1));  // t = T is outside
  CHECK_THROWS(ineq20(p, h, 3, 6));   // k above the band
}

TEST_CASE("exponential upper bound family, backward form") {
  // degenerate reduction: S empty, m = 0, L = 1, n = 0
  auto p1 = gen1(1, 1);
  Horizon h(6);
  auto r = ineq21(p1, h, 3, 0, 0, {});
  LinearInequality want;  // x_t <= Vb y_t + (Cb - Vb)(y_t - u_t)
  want.add(X(3), 1);
  want.add(Y(3), -180);
  want.add(Y(3), -275);
  want.add(U(3), 275);
  want.normalize();
  CHECK(r.coeffs == want.coeffs);

  // the band example: C=20, Cb=80, V=16, Vb=28, L=3; t=6, m=1, n=1, S={6}
  auto p6 = make_params(20, 80, 16, 28, 3, 3);
  Horizon h8(8);
  CHECK(ineq21_m_max(p6, h8, 6) == 1);  // floor(52/16 - 2) = 1
  auto row = ineq21(p6, h8, 6, 1, 1, {6});
  // beta = 80 - 28 - (1+3-1)*16 = 4 >= 0, row constructs and is valid
  Rational beta = p6.c_max - p6.startstop_ramp - Rational(1 + 3 - 1) * p6.ramp;
  CHECK(beta == 4);
  auto [viol, wit] = max_violation(row, p6, Horizon(8));
  CHECK(viol <= 0);

  // telescoping: V*(sum_gaps + [n-1]+ + alpha) + beta == Cb - Vb
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    int L = 1 + static_cast<int>(rng() % 4);
    auto p = make_params(5 + rng() % 15, 60 + rng() % 60, 1 + rng() % 9, 20 + rng() % 20, L, 1);
    Horizon hh(8);
    int t = L + 1 + static_cast<int>(rng() % (hh.T - L));
    int m_max = ineq21_m_max(p, hh, t);
    if (m_max < 0) continue;
    int m = static_cast<int>(rng() % (m_max + 1));
    auto [n_lo, n_hi] = ineq21_n_range(p, hh, t);
    int n = n_lo + static_cast<int>(rng() % (n_hi - n_lo + 1));
    if (!ineq21_condition(p, hh, t, n)) continue;
    std::vector<int> S;
    for (int i = t - m + 1; i <= t; ++i)
      if (rng() % 2) S.push_back(i);
    auto rr = ineq21(p, hh, t, m, n, S);
    long gaps = S.empty() ? 0 : S.back() - (t - m);
    long alpha = m + L - 1 - gaps - std::max(0, n - 1);
    Rational lhs = p.ramp * Rational(gaps + std::max(0, n - 1) + alpha) +
                   (p.c_max - p.startstop_ramp - (m + L - 1) * p.ramp);
    CHECK(lhs == p.c_max - p.startstop_ramp);
    CHECK(alpha >= 0);
  }
}

TEST_CASE("ramp-up difference family reductions") {
  auto p = gen1(1, 1);
  Horizon h(24);
  // m=1, S empty, L=1 at the horizon end reduces to the two-period ramp-up row
  auto r = ineq25_26(p, h, 24, 1, 0, {});
  LinearInequality q2row;  // x_t - x_{t-1} <= (C+V) y_t - C y_{t-1} - (C+V-Vb) u_t
  q2row.add(X(24), 1);
  q2row.add(X(23), -1);
  q2row.add(Y(24), -(Rational(150) + 91));
  q2row.add(Y(23), 150);
  q2row.add(U(24), Rational(150) + 91 - 180);
  q2row.normalize();
  CHECK(r.coeffs == q2row.coeffs);
  // away from the end the trailing status joins at t+n instead
  Horizon h5(5);
  auto rmid = ineq25_26(p, h5, 4, 1, 1, {});
  CHECK(max_violation(rmid, p, h5).first <= 0);

  // alpha coefficient example: t=10, m=3, n=1, S empty -> 150 + 3*91 - 180 = 243
  auto r3 = ineq25_26(p, h, 10, 3, 1, {});
  Rational y11_coeff = 0;
  for (auto& [k, c] : r3.coeffs)
    if (k == Y(11)) y11_coeff = c;
  CHECK(y11_coeff == -243);
}

TEST_CASE("three-period alternating row examples") {
  auto p = gen1(2, 2);
  Horizon h(24);
  auto r = ineq28(p, h, 10);
  // L=2: the trailing start-up sum is empty
  for (auto& [k, c] : r.coeffs) CHECK(k.t >= 8);
  CHECK_FALSE(r.facet_claimed);      // L=2 claims only the band start
  CHECK(ineq28(p, h, 3).facet_claimed);
  auto p3 = gen1(3, 2);
  CHECK(ineq28(p3, h, 10).facet_claimed);  // L=3 claims the whole band

  // oracle validity at T=5
  Horizon h5(5);
  auto vs = feasible_vertex_superset(p, h5);
  for (int t = 3; t <= 4; ++t) CHECK(vs.max_violation(ineq28(p, h5, t)).value <= 0);
}

TEST_CASE("validity sweep across regimes at small horizons") {
  std::mt19937_64 rng(23);
  std::vector<std::pair<ParamCase, TwoVRegime>> combos = {
      {ParamCase::Case1, TwoVRegime::GE}, {ParamCase::Case1, TwoVRegime::LT},
      {ParamCase::Case2, TwoVRegime::LT}, {ParamCase::Case3, TwoVRegime::LT},
      {ParamCase::Case4, TwoVRegime::GE}, {ParamCase::Case5, TwoVRegime::GE},
  };
  for (auto [pc, reg] : combos)
    for (int L : {1, 2, 3}) {
      int l = 1 + static_cast<int>(rng() % 2);
      auto p = draw_params(rng, pc, reg, L, l);
      for (int T : {4, 5}) {
        Horizon h(T);
        auto vs = feasible_vertex_superset(p, h);
        for_each_family_row(p, h, 8, [&](const LinearInequality& r) {
          auto mv = vs.max_violation(r);
          if (mv.value > 0) {
            CAPTURE(r.describe());
            CAPTURE(to_string(pc));
            CAPTURE(L);
            CAPTURE(T);
            REQUIRE(mv.value <= 0);
          }
        });
      }
    }
}

TEST_CASE("facet-claimed rows have facet rank on a small grid") {
  std::mt19937_64 rng(31);
  for (int L : {1, 2, 3}) {
    auto p = draw_params(rng, ParamCase::Case1, TwoVRegime::GE, L, std::min(L, 2), true);
    for (int T : {4, 5}) {
      Horizon h(T);
      auto vs = feasible_vertex_superset(p, h);
      int dim = affine_dimension(vs.points);
      REQUIRE(dim == 3 * T - 1);
      int checked = 0;
      for_each_family_row(p, h, 6, [&](const LinearInequality& r) {
        if (!r.facet_claimed) return;
        if (r.family.rfind("q2", 0) == 0 || r.family.rfind("q3", 0) == 0) return;
        auto fr = facet_rank(r, vs);
        REQUIRE(fr.valid);
        if (fr.rank != dim - 1) {
          CAPTURE(r.describe());
          CHECK(fr.rank == dim - 1);
        }
        ++checked;
      });
      CHECK(checked > 0);
    }
  }
}
