#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ucpoly/hull_oracle.hpp"
#include "ucpoly/model.hpp"

using namespace ucpoly;

namespace {

GeneratorParams gen1(int min_up = 1, int min_down = 1) {
  return make_params(150, 455, 91, 180, min_up, min_down);
}

Schedule sched(std::vector<int> y, std::vector<int> u) {
  Schedule s;
  s.y = std::move(y);
  s.u = std::move(u);
  return s;
}

}  // namespace

TEST_CASE("classification covers the five regimes") {
  auto c1 = classify(gen1());
  CHECK(c1.case_id == ParamCase::Case1);  // 455-180-91 >= 0, 180 < 150+91
  CHECK(c1.reg_2v == TwoVRegime::GE);     // 455-150-182 = 123 >= 0

  CHECK(classify(make_params(10, 20, 4, 12)).case_id == ParamCase::Case1);
  CHECK(classify(make_params(10, 13, 4, 12)).case_id == ParamCase::Case3);
  CHECK(classify(make_params(10, 100, 20, 40)).case_id == ParamCase::Case4);
  CHECK(classify(make_params(10, 40, 20, 35)).case_id == ParamCase::Case5);
  CHECK(classify(make_params(20, 40, 15, 30)).case_id == ParamCase::Case2);

  // startstop below c_min is rejected
  GeneratorParams bad;
  bad.c_min = 10;
  bad.c_max = 20;
  bad.ramp = 5;
  bad.startstop_ramp = 12;
  bad.startstop_ramp = 12;
  CHECK_THROWS(classify(make_params(10, 20, 5, 8)));
}

TEST_CASE("classify matches brute-force condition evaluation on a grid") {
  for (long C = 0; C <= 12; C += 3)
    for (long Vb = C; Vb <= C + 14; Vb += 2)
      for (long Cb = Vb; Cb <= Vb + 16; Cb += 4)
        for (long V = 1; V <= 9; V += 2) {
          if (!(C <= Vb && Vb <= Cb)) continue;
          auto p = make_params(C, Cb, V, Vb);
          auto info = classify(p);
          bool small_vbar = Vb < C + V;
          bool room = Cb - Vb - V >= 0;
          bool wide = Cb - C - V >= 0;
          ParamCase expect;
          if (small_vbar && room) expect = ParamCase::Case1;
          else if (small_vbar && wide) expect = ParamCase::Case2;
          else if (small_vbar) expect = ParamCase::Case3;
          else if (room) expect = ParamCase::Case4;
          else expect = ParamCase::Case5;
          CHECK(info.case_id == expect);
          CHECK((info.reg_2v == TwoVRegime::GE) == (Cb - C - 2 * V >= 0));
        }
}

TEST_CASE("schedule feasibility") {
  Horizon h3(3);
  auto p = gen1(2, 2);
  CHECK(is_feasible_schedule(sched({0, 0, 0}, {0, 0}), p, h3));
  CHECK_FALSE(is_feasible_schedule(sched({0, 1, 0}, {1, 0}), p, h3));  // min-up broken at t=3
  CHECK(is_feasible_schedule(sched({1, 1, 1}, {0, 0}), p, h3));
  CHECK_FALSE(is_feasible_schedule(sched({0, 1, 1}, {0, 0}), p, h3));  // logic needs u2=1
}

TEST_CASE("point feasibility") {
  Horizon h2(2);
  auto p = gen1();
  Point zero(h2);
  CHECK(is_feasible_point(zero, p, h2));

  Point on(h2);
  on.y(1) = 1;
  on.y(2) = 1;
  on.x(1) = 455;
  on.x(2) = 455;
  CHECK(is_feasible_point(on, p, h2));

  on.x(2) = 300;  // ramp-down 155 > 91
  CHECK_FALSE(is_feasible_point(on, p, h2));
}

TEST_CASE("eval_violation") {
  Horizon h2(2);
  auto p = gen1();
  LinearInequality e;  // x2 <= Cb y2 - (Cb - Vb) u2
  e.add(X(2), 1);
  e.add(Y(2), -p.c_max);
  e.add(U(2), p.c_max - p.startstop_ramp);
  e.rhs = 0;
  e.normalize();

  Point pt(h2);
  pt.x(2) = 455;
  pt.y(2) = 1;
  pt.u(2) = 1;
  CHECK(eval_violation(e, pt) == 275);
  pt.x(2) = 180;
  CHECK(eval_violation(e, pt) == 0);

  LinearInequality zero_row;
  zero_row.rhs = 0;
  CHECK(eval_violation(zero_row, pt) == 0);
}

TEST_CASE("schedule enumeration") {
  auto p11 = gen1(1, 1);
  auto list2 = enumerate_schedules(p11, Horizon(2));
  REQUIRE(list2.size() == 4);
  // off-off, off-on(start), on-off, on-on; u pinned by the window rows
  CHECK(list2[0] == sched({0, 0}, {0}));
  CHECK(list2[1] == sched({0, 1}, {1}));
  CHECK(list2[2] == sched({1, 0}, {0}));
  CHECK(list2[3] == sched({1, 1}, {0}));

  auto p22 = gen1(2, 2);
  CHECK(enumerate_schedules(p22, Horizon(3)).size() == 6);
  CHECK(enumerate_schedules(p11, Horizon(1)).size() == 2);
  CHECK_THROWS(enumerate_schedules(p11, Horizon(13)));
}

TEST_CASE("dispatch vertices") {
  auto p = gen1();
  Horizon h2(2);

  auto off = dispatch_vertices(sched({0, 0}, {0}), p, h2);
  REQUIRE(off.size() == 1);
  CHECK(off[0][0] == 0);
  CHECK(off[0][1] == 0);

  Horizon h1(1);
  Schedule s1;
  s1.y = {1};
  auto v1 = dispatch_vertices(s1, p, h1);
  REQUIRE(v1.size() == 2);
  CHECK(v1[0][0] == 150);
  CHECK(v1[1][0] == 455);

  auto on = dispatch_vertices(sched({1, 1}, {0}), p, h2);
  REQUIRE(on.size() == 6);
  auto has = [&](long a, long b) {
    for (const auto& v : on)
      if (v[0] == a && v[1] == b) return true;
    return false;
  };
  CHECK(has(150, 150));
  CHECK(has(150, 241));
  CHECK(has(241, 150));
  CHECK(has(455, 455));
  CHECK(has(455, 364));
  CHECK(has(364, 455));
}

TEST_CASE("vertex superset counts") {
  auto p = gen1();
  auto v1 = feasible_vertex_superset(p, Horizon(1));
  CHECK(v1.points.size() == 3);  // origin, (C,1), (Cb,1)

  auto v2 = feasible_vertex_superset(p, Horizon(2));
  // 1 (off-off) + 2 (start) + 2 (stop) + 6 (on-on)
  CHECK(v2.points.size() == 11);
}

TEST_CASE("max violation over the superset") {
  auto p = gen1();
  Horizon h2(2);

  LinearInequality trivially_valid;  // 0 <= 1
  trivially_valid.rhs = 1;
  auto [val, wit] = max_violation(trivially_valid, p, h2);
  CHECK(val == -1);

  LinearInequality bad;  // x1 <= Vb y1 is not valid: on-on reaches x1 = Cb
  bad.add(X(1), 1);
  bad.add(Y(1), -p.startstop_ramp);
  bad.normalize();
  auto [v2, w2] = max_violation(bad, p, h2);
  CHECK(v2 == 275);
  CHECK(w2.x(1) == 455);
}

TEST_CASE("affine dimension and facet rank") {
  auto p22 = gen1(2, 2);
  Horizon h3(3);
  auto vs = feasible_vertex_superset(p22, h3);
  CHECK(affine_dimension(vs.points) == 8);  // full dimensional, 3T-1

  auto p11 = gen1(1, 1);
  auto vs2 = feasible_vertex_superset(p11, Horizon(2));
  CHECK(affine_dimension(vs2.points) == 5);

  std::vector<Point> single{vs.points[0]};
  CHECK(affine_dimension(single) == 0);

  LinearInequality lb;  // x1 >= C y1  as  -x1 + C y1 <= 0
  lb.add(X(1), -1);
  lb.add(Y(1), p22.c_min);
  lb.normalize();
  auto fr = facet_rank(lb, p22, h3);
  CHECK(fr.valid);
  CHECK(fr.rank == 7);  // facet: dim - 1

  LinearInequality weak;  // x1 <= 2 Cb y1: valid but far from a facet
  weak.add(X(1), 1);
  weak.add(Y(1), -2 * p22.c_max);
  weak.normalize();
  auto fr2 = facet_rank(weak, p22, h3);
  CHECK(fr2.valid);
  CHECK(fr2.rank < 7);

  LinearInequality invalid;  // x1 <= Vb y1
  invalid.add(X(1), 1);
  invalid.add(Y(1), -p22.startstop_ramp);
  invalid.normalize();
  CHECK_FALSE(facet_rank(invalid, p22, h3).valid);
}
