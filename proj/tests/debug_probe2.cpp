// scratch: (a) ineq28 facet shape at T=6, (b) ineq26 with t-1 in S at
// interior m, (c) ineq29 printed-phi with m >= 2 validity + facet
#include "ucpoly/cut_families.hpp"
#include "ucpoly/hull_oracle.hpp"

#include <iostream>
#include <random>

using namespace ucpoly;

int main() {
  {  // (a) ineq28, L in {2,3}, T=6
    std::mt19937_64 rng(99);
    for (int L : {2, 3}) {
      int done = 0;
      while (done < 4) {
        long C = 1 + rng() % 20, V = 1 + rng() % 12, Vb = C + rng() % 25, Cb = Vb + rng() % 31;
        if (!(C <= Vb && Vb <= Cb)) continue;
        if (Cb - C - 2 * V == 0 || Cb - Vb - V == 0 || Vb == C || C + V == Vb) continue;
        GeneratorParams p;
        try {
          p = make_params(C, Cb, V, Vb, L, 2);
        } catch (...) {
          continue;
        }
        if (classify(p).case_id != ParamCase::Case1) continue;
        ++done;
        Horizon h(6);
        auto vs = feasible_vertex_superset(p, h);
        int dim = affine_dimension(vs.points);
        std::cout << "ineq28 L=" << L << " C=" << C << " Cb=" << Cb << " V=" << V << " Vb=" << Vb
                  << " :";
        for (int t = std::max(L + 1, 3); t <= 5; ++t) {
          auto fr = facet_rank(ineq28(p, h, t), vs);
          std::cout << " t" << t << (fr.rank == dim - 1 ? "=F" : "=x");
        }
        std::cout << "\n";
      }
    }
  }
  {  // (b) ineq26 interior m with t-1 in S beyond the anchor: L=1, V=3, big band
    auto p = make_params(5, 40, 3, 7, 1, 1);  // (Cb-C)/V = 11.67, Case1
    Horizon h(5);
    auto vs = feasible_vertex_superset(p, h);
    int dim = affine_dimension(vs.points);
    for (int m : {3, 4}) {
      int t = 5;  // n = 0
      std::vector<int> S = {t - 1, t};  // anchor = t-m+1 < t-1 for m >= 3
      auto r = ineq25_26(p, h, t, m, 0, S);
      auto fr = facet_rank(r, vs);
      std::cout << "ineq26 interior m=" << m << " S={t-1,t} rank=" << fr.rank << "/" << dim - 1
                << (fr.valid ? "" : " INVALID") << "\n";
      std::vector<int> S2 = {t};
      auto fr2 = facet_rank(ineq25_26(p, h, t, m, 0, S2), vs);
      std::cout << "ineq26 interior m=" << m << " S={t} rank=" << fr2.rank << "/" << dim - 1
                << "\n";
    }
  }
  {  // (c) ineq29 printed sign, L=2, m >= 2 only
    std::mt19937_64 rng(7);
    long invalid = 0, nonfacet = 0, total = 0;
    int draws = 0;
    while (draws < 25) {
      long C = 1 + rng() % 20, V = 1 + rng() % 12, Vb = C + rng() % 25, Cb = Vb + rng() % 31;
      if (!(C <= Vb && Vb <= Cb)) continue;
      if (Cb - C - 2 * V == 0 || Cb - Vb - V == 0 || Vb == C || C + V == Vb) continue;
      GeneratorParams p;
      try {
        p = make_params(C, Cb, V, Vb, 2, 1 + rng() % 2);
      } catch (...) {
        continue;
      }
      if (classify(p).case_id != ParamCase::Case1) continue;
      ++draws;
      int T = 5 + static_cast<int>(rng() % 2);
      Horizon h(T);
      auto vs = feasible_vertex_superset(p, h);
      int dim = affine_dimension(vs.points);
      for (int t = 3; t <= T; ++t) {
        auto [mlo, mhi] = ineq29_m_range(p, h, t);
        for (int m = std::max(2, mlo); m <= mhi; ++m) {
          auto [slo, shi] = ineq29_s_band(p, t, m);
          int len = std::max(0, shi - slo + 1);
          for (unsigned mask = 0; mask < (1u << len); ++mask) {
            std::vector<int> S;
            for (int b = 0; b < len; ++b)
              if (mask & (1u << b)) S.push_back(slo + b);
            auto row = ineq29(p, h, t, m, S);  // currently +phi
            Rational coef = p.c_min + p.ramp - p.startstop_ramp;
            if (coef > 0) {  // convert to the printed -phi version
              row.add(U(t - 2), 2 * coef);
              row.normalize();
            }
            ++total;
            auto fr = facet_rank(row, vs);
            if (!fr.valid) {
              ++invalid;
              std::cout << "invalid at C=" << C << " Cb=" << Cb << " V=" << V << " Vb=" << Vb
                        << " t=" << t << " m=" << m << " T=" << T << "\n";
            } else if (t == T && fr.rank != dim - 1)
              ++nonfacet;
          }
        }
      }
    }
    std::cout << "ineq29 printed-phi m>=2: invalid " << invalid << ", nonfacet-at-T " << nonfacet
              << " of " << total << "\n";
  }
  return 0;
}
