#pragma once

#include "ucpoly/cut_families.hpp"

#include <optional>

namespace ucpoly {

// ---------------------------------------------------------------------------
// Most-violated-cut search for the exponential families over directed acyclic
// graphs: a path's cost equals rhs - lhs of the corresponding row, so the
// shortest o->d path identifies the most violated member (the visited time
// nodes give the index set S). Float mode drives the solver loop; rational
// mode backs the exactness tests.
// ---------------------------------------------------------------------------

template <typename Scalar>
struct SeparationGraph {
  struct Arc {
    int from, to;
    Scalar weight;
  };
  int n_nodes = 0;                 // node 0 = origin, node n_nodes-1 = destination
  std::vector<int> time_of_node;   // time index per node, -1 for o/r/d
  std::vector<Arc> arcs;           // arcs respect the node order (topological)

  size_t arc_count() const { return arcs.size(); }
};

template <typename Scalar>
struct ShortestPath {
  Scalar cost;
  std::vector<int> nodes;  // o ... d
  bool reachable = false;
};

/// Single-source shortest path by topological relaxation; ties keep the
/// predecessor with the smaller node index.
template <typename Scalar>
ShortestPath<Scalar> shortest_path(const SeparationGraph<Scalar>& g);

enum class SepFamily { F21 = 21, F24 = 24, F26 = 26, F27 = 27, F29 = 29, F30 = 30 };

template <typename Scalar>
struct SeparationResult {
  Scalar best_violation = Scalar(0);
  std::optional<LinearInequality> cut;
  std::vector<int> chosen_s;
  int t = 0, m = 0, n = 0;
  size_t graphs_built = 0;
  size_t arcs_total = 0;
};

/// Graph for the backward single-variable family at a fixed (t, m, n).
template <typename Scalar>
SeparationGraph<Scalar> build_graph_21(const PointT<Scalar>& pt, const GeneratorParams& p,
                                       const Horizon& h, int t, int m, int n);

/// Most violated member of one family over all admissible index tuples;
/// ties pick the lexicographically smallest (t, m, n).
template <typename Scalar>
SeparationResult<Scalar> separate_family(const PointT<Scalar>& pt, const GeneratorParams& p,
                                         const Horizon& h, SepFamily family,
                                         const Scalar& violation_tolerance);

/// Exhaustive subset enumeration over the same tuple ranges (test oracle).
template <typename Scalar>
SeparationResult<Scalar> brute_force_separate(const PointT<Scalar>& pt, const GeneratorParams& p,
                                              const Horizon& h, SepFamily family,
                                              const Scalar& violation_tolerance,
                                              int band_cap = 14);

extern template struct SeparationGraph<double>;
extern template struct SeparationGraph<Rational>;
extern template ShortestPath<double> shortest_path(const SeparationGraph<double>&);
extern template ShortestPath<Rational> shortest_path(const SeparationGraph<Rational>&);
extern template SeparationGraph<double> build_graph_21(const PointT<double>&,
                                                       const GeneratorParams&, const Horizon&,
                                                       int, int, int);
extern template SeparationGraph<Rational> build_graph_21(const PointT<Rational>&,
                                                         const GeneratorParams&, const Horizon&,
                                                         int, int, int);
extern template SeparationResult<double> separate_family(const PointT<double>&,
                                                         const GeneratorParams&, const Horizon&,
                                                         SepFamily, const double&);
extern template SeparationResult<Rational> separate_family(const PointT<Rational>&,
                                                           const GeneratorParams&, const Horizon&,
                                                           SepFamily, const Rational&);
extern template SeparationResult<double> brute_force_separate(const PointT<double>&,
                                                              const GeneratorParams&,
                                                              const Horizon&, SepFamily,
                                                              const double&, int);
extern template SeparationResult<Rational> brute_force_separate(const PointT<Rational>&,
                                                                const GeneratorParams&,
                                                                const Horizon&, SepFamily,
                                                                const Rational&, int);

}  // namespace ucpoly
