#pragma once

#include "ucpoly/linalg.hpp"
#include "ucpoly/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ucpoly {

// ---------------------------------------------------------------------------
// Brute-force certification engine for small horizons: enumerates the
// feasible binary patterns, the dispatch vertices above each of them, and
// certifies validity / dimension / facet rank / hull equality claims in
// exact arithmetic.
// ---------------------------------------------------------------------------

inline constexpr int kDefaultScheduleCap = 12;
inline constexpr int kDefaultHullCap = 4;
inline constexpr int kDispatchRunCap = 8;

/// All feasible binary (y, u) patterns in lexicographic (y, then u) order.
std::vector<Schedule> enumerate_schedules(const GeneratorParams& p, const Horizon& h,
                                          int cap = kDefaultScheduleCap);

/// All vertices of the dispatch polytope {x : (x, s) in P} for a feasible
/// pattern, deterministic order (per-run vertex lists are lexicographic, the
/// cartesian product iterates the last run fastest).
std::vector<std::vector<Rational>> dispatch_vertices(const Schedule& s, const GeneratorParams& p,
                                                     const Horizon& h);

struct VertexSet {
  Horizon horizon;
  std::vector<Point> points;
  std::vector<Schedule> schedules;  // schedule of each point

  explicit VertexSet(Horizon h) : horizon(h) {}

  struct MaxViolation {
    Rational value;
    size_t witness = 0;
  };
  /// Exact max of (lhs - rhs) over the stored points, with the first
  /// attaining point as witness. Uses an integer fast path when the
  /// coordinates and the row scale into int64.
  MaxViolation max_violation(const LinearInequality& ineq) const;

  void build_int_cache();

 private:
  bool int_cache_ = false;
  long long denom_ = 1;
  long long max_coord_ = 0;
  std::vector<std::vector<long long>> coords_;
};

/// Union of dispatch vertices over all feasible patterns; contains every
/// vertex of conv(P).
VertexSet feasible_vertex_superset(const GeneratorParams& p, const Horizon& h,
                                   int cap = kDefaultScheduleCap);

std::pair<Rational, Point> max_violation(const LinearInequality& ineq, const GeneratorParams& p,
                                         const Horizon& h);

/// Affine dimension (rank of the difference set) of a nonempty point list.
int affine_dimension(const std::vector<Point>& points);

struct FacetRank {
  bool valid = false;  // precondition max_violation <= 0
  int rank = -1;       // affine dimension of the tight vertex subset
};
FacetRank facet_rank(const LinearInequality& ineq, const GeneratorParams& p, const Horizon& h);
FacetRank facet_rank(const LinearInequality& ineq, const VertexSet& verts);

struct HullCertificate {
  enum class Verdict { EQUAL, Q_NOT_SUBSET, Q_NOT_SUPERSET, UNBOUNDED };

  Verdict verdict = Verdict::EQUAL;
  int dim = -1;  // affine dimension of P's vertex superset
  std::optional<Point> witness_point;           // Q vertex outside conv(P), or cut-off P vertex
  std::optional<LinearInequality> witness_ineq; // system row violated by a P vertex
  std::optional<VectorR> ray;                   // recession direction when unbounded
  size_t q_vertex_count = 0;
  std::string detail;

  bool equal() const { return verdict == Verdict::EQUAL; }
};

std::string to_string(HullCertificate::Verdict v);

/// Certifies {system rows + non-implied trivial bounds} == conv(P) by exact
/// enumeration: every system row must be valid for P's vertices, the
/// polyhedron must be bounded, and every one of its vertices must be a
/// feasible binary point.
HullCertificate certify_hull(const std::vector<LinearInequality>& system,
                             const GeneratorParams& p, const Horizon& h,
                             int cap = kDefaultHullCap);

}  // namespace ucpoly
