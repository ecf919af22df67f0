#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ucpoly/hull_oracle.hpp"
#include "ucpoly/separation.hpp"

#include <random>

using namespace ucpoly;

namespace {

GeneratorParams gen1(int min_up = 1, int min_down = 1) {
  return make_params(150, 455, 91, 180, min_up, min_down);
}

Point random_box_point(std::mt19937_64& rng, const GeneratorParams& p, const Horizon& h) {
  Point pt(h);
  std::uniform_int_distribution<long> frac(0, 16);
  for (int t = 1; t <= h.T; ++t) {
    pt.y(t) = Rational(frac(rng), 16);
    pt.x(t) = pt.y(t) * p.c_max * Rational(frac(rng), 16);
  }
  for (int t = 2; t <= h.T; ++t) pt.u(t) = Rational(frac(rng), 16);
  return pt;
}

const std::vector<SepFamily> kFamilies = {SepFamily::F21, SepFamily::F24, SepFamily::F26,
                                          SepFamily::F27, SepFamily::F29, SepFamily::F30};

}  // namespace

TEST_CASE("shortest path on handmade graphs") {
  SeparationGraph<double> chain;
  chain.n_nodes = 3;
  chain.time_of_node = {-1, 5, -1};
  chain.arcs = {{0, 1, 2.0}, {1, 2, -3.5}};
  auto sp = shortest_path(chain);
  REQUIRE(sp.reachable);
  CHECK(sp.cost == doctest::Approx(-1.5));
  CHECK(sp.nodes == std::vector<int>{0, 1, 2});

  // two parallel arcs of equal cost: the smaller predecessor index wins
  SeparationGraph<double> par;
  par.n_nodes = 4;
  par.time_of_node = {-1, 1, 2, -1};
  par.arcs = {{0, 1, 1.0}, {0, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}};
  auto sp2 = shortest_path(par);
  REQUIRE(sp2.reachable);
  CHECK(sp2.nodes == std::vector<int>{0, 1, 3});

  // reference check against Bellman-Ford on random DAGs
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    int n = 4 + static_cast<int>(rng() % 8);
    SeparationGraph<double> g;
    g.n_nodes = n;
    g.time_of_node.assign(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a)
      for (int bnode = a + 1; bnode < n; ++bnode)
        if (rng() % 3 != 0)
          g.arcs.push_back({a, bnode, static_cast<double>(static_cast<long>(rng() % 41)) - 20.0});
    std::vector<double> dist(static_cast<size_t>(n), 1e100);
    dist[0] = 0;
    for (int pass = 0; pass < n; ++pass)
      for (auto& a : g.arcs)
        if (dist[static_cast<size_t>(a.from)] + a.weight < dist[static_cast<size_t>(a.to)])
          dist[static_cast<size_t>(a.to)] = dist[static_cast<size_t>(a.from)] + a.weight;
    auto got = shortest_path(g);
    if (dist[static_cast<size_t>(n - 1)] < 1e99) {
      REQUIRE(got.reachable);
      CHECK(got.cost == doctest::Approx(dist[static_cast<size_t>(n - 1)]));
    } else {
      CHECK_FALSE(got.reachable);
    }
  }
}

TEST_CASE("graph shape and arc-count bound") {
  auto p = gen1(3, 3);
  Horizon h(12);
  Point pt(h);
  for (int m = 0; m <= ineq21_m_max(p, h, 8); ++m) {
    auto g = build_graph_21(pt, p, h, 8, m, std::min(1, h.T - 8));
    CHECK(g.arc_count() == static_cast<size_t>(2 + (m + 1) + (m + 1) * m / 2));
    CHECK(g.arc_count() <= static_cast<size_t>(2 + (m + 1) * (m + 4) / 2));
  }
}

TEST_CASE("integral feasible points admit no violated cut") {
  auto p = gen1(2, 2);
  Horizon h(6);
  auto vs = feasible_vertex_superset(p, h);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 10; ++it) {
    const Point& pt = vs.points[rng() % vs.points.size()];
    for (auto fam : kFamilies) {
      auto res = separate_family<Rational>(pt, p, h, fam, Rational(0));
      CHECK_FALSE(res.cut.has_value());
      CHECK(res.best_violation <= 0);
    }
  }
}

TEST_CASE("DAG separation equals brute force exactly (rational mode)") {
  std::mt19937_64 rng(17);
  std::vector<GeneratorParams> gens = {gen1(1, 1), gen1(2, 2), gen1(3, 2),
                                       make_params(20, 80, 16, 28, 3, 3),
                                       make_params(10, 55, 11, 15, 1, 1),
                                       make_params(25, 162, Rational(162, 5), 40, 2, 2)};
  for (const auto& p : gens) {
    Horizon h(8);
    for (int it = 0; it < 6; ++it) {
      Point pt = random_box_point(rng, p, h);
      for (auto fam : kFamilies) {
        auto fast = separate_family<Rational>(pt, p, h, fam, Rational(0));
        auto slow = brute_force_separate<Rational>(pt, p, h, fam, Rational(0));
        if (fast.graphs_built == 0) continue;  // family gated off for these params
        CAPTURE(static_cast<int>(fam));
        CHECK(fast.best_violation == slow.best_violation);
        if (fast.cut) {
          // returned cut reproduces the claimed violation exactly
          CHECK(fast.cut->violation(pt) == fast.best_violation);
          // deterministic tuple tie-break: lexicographically smallest
          CHECK(std::make_tuple(fast.t, fast.m, fast.n) <=
                std::make_tuple(slow.t, slow.m, slow.n));
        }
      }
    }
  }
}

TEST_CASE("float separation agrees with rational within 1e-9") {
  std::mt19937_64 rng(29);
  auto p = gen1(2, 2);
  Horizon h(10);
  for (int it = 0; it < 10; ++it) {
    Point pt = random_box_point(rng, p, h);
    PointD ptd = to_double_point(pt);
    for (auto fam : kFamilies) {
      auto exact = separate_family<Rational>(pt, p, h, fam, Rational(0));
      auto fl = separate_family<double>(ptd, p, h, fam, 1e-6);
      if (exact.graphs_built == 0) continue;
      CHECK(std::abs(to_double(exact.best_violation) - fl.best_violation) < 1e-9);
    }
  }
}

TEST_CASE("separated cuts are valid rows at desk scale") {
  std::mt19937_64 rng(41);
  auto p = gen1(2, 2);
  Horizon h(5);
  auto vs = feasible_vertex_superset(p, h);
  int found = 0;
  for (int it = 0; it < 20; ++it) {
    Point pt = random_box_point(rng, p, h);
    for (auto fam : kFamilies) {
      auto res = separate_family<Rational>(pt, p, h, fam, Rational(0));
      if (!res.cut) continue;
      ++found;
      CHECK(vs.max_violation(*res.cut).value <= 0);
    }
  }
  CHECK(found > 0);
}
