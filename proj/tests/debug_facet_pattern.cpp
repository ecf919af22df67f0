// scratch: classify which (family, tuple shape) combinations fail the
// facet-rank claim on nondegenerate draws
#include "ucpoly/cut_families.hpp"
#include "ucpoly/hull_oracle.hpp"

#include <iostream>
#include <map>
#include <random>

using namespace ucpoly;

int main() {
  std::mt19937_64 rng(1234);
  std::map<std::string, std::pair<long, long>> tally;  // key -> (fail, total)
  int draws = 0;
  while (draws < 24) {
    long C = 1 + rng() % 20, V = 1 + rng() % 12, Vb = C + rng() % 25, Cb = Vb + rng() % 31;
    if (!(C <= Vb && Vb <= Cb)) continue;
    if (Cb - C - 2 * V == 0 || Cb - Vb - V == 0 || Vb == C || C + V == Vb) continue;
    int L = 1 + static_cast<int>(rng() % 3);
    int l = 1 + static_cast<int>(rng() % 2);
    GeneratorParams p;
    try {
      p = make_params(C, Cb, V, Vb, L, l);
    } catch (...) {
      continue;
    }
    auto info = classify(p);
    if (info.case_id != ParamCase::Case1) continue;
    ++draws;
    int T = 4 + static_cast<int>(rng() % 2);
    Horizon h(T);
    auto vs = feasible_vertex_superset(p, h);
    int dim = affine_dimension(vs.points);
    for_each_family_row(p, h, 6, [&](const LinearInequality& r) {
      if (!r.facet_claimed) return;
      if (r.family.rfind("q2", 0) == 0 || r.family.rfind("q3", 0) == 0) return;
      auto fr = facet_rank(r, vs);
      std::string key = r.family;
      auto get = [&](const char* name, long dflt) {
        auto it = r.params.find(name);
        return it == r.params.end() ? dflt : it->second;
      };
      long t = get("t", -1), m = get("m", -1), n = get("n", -1);
      // shape features
      if (m >= 0) key += m == 0 ? " m=0" : " m>0";
      if (n >= 0) {
        key += n == 0 ? " n=0" : " n>0";
        key += (t + n == T) ? " t+n=T" : " t+n<T";
      }
      if (r.family == "ineq26" || r.family == "ineq27") {
        long q = r.set_s.empty() ? get("q", -1) : r.set_s.back();
        if (r.family == "ineq26") key += (q == t) ? " q=t" : " q<t";
        else key += (q == t + m) ? " q=t+m" : " q<t+m";
      }
      if (r.family == "ineq29" || r.family == "ineq28") key += " L=" + std::to_string(p.min_up);
      if (r.family == "ineq30") key += " T-t=" + std::to_string(T - t);
      auto& cell = tally[key];
      ++cell.second;
      if (fr.rank != dim - 1) ++cell.first;
    });
  }
  for (auto& [k, c] : tally)
    std::cout << k << "  fail " << c.first << "/" << c.second << "\n";
  return 0;
}
