#pragma once

#include "ucpoly/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ucpoly {

// ---------------------------------------------------------------------------
// Exact integer elimination kernels. The hull certification enumerates
// dim-sized row subsets of small integer systems; the inner loop runs
// fraction-free (Bareiss) elimination over a checked 128-bit type and a
// whole enumeration is re-run over arbitrary precision if anything
// overflows, so results are exact either way.
// ---------------------------------------------------------------------------

struct Int128Overflow : std::runtime_error {
  Int128Overflow() : std::runtime_error("int128 overflow") {}
};

struct CheckedInt128 {
  __int128 v = 0;

  CheckedInt128() = default;
  CheckedInt128(long long x) : v(x) {}
  static CheckedInt128 raw(__int128 x) {
    CheckedInt128 r;
    r.v = x;
    return r;
  }

  friend CheckedInt128 operator+(CheckedInt128 a, CheckedInt128 b) {
    CheckedInt128 r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Int128Overflow();
    return r;
  }
  friend CheckedInt128 operator-(CheckedInt128 a, CheckedInt128 b) {
    CheckedInt128 r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Int128Overflow();
    return r;
  }
  friend CheckedInt128 operator*(CheckedInt128 a, CheckedInt128 b) {
    CheckedInt128 r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Int128Overflow();
    return r;
  }
  friend CheckedInt128 operator/(CheckedInt128 a, CheckedInt128 b) {
    return CheckedInt128::raw(a.v / b.v);  // exact divisions only
  }
  friend CheckedInt128 operator-(CheckedInt128 a) { return CheckedInt128::raw(-a.v); }
  friend bool operator==(CheckedInt128 a, CheckedInt128 b) { return a.v == b.v; }
  friend bool operator<(CheckedInt128 a, CheckedInt128 b) { return a.v < b.v; }
  friend bool operator<=(CheckedInt128 a, CheckedInt128 b) { return a.v <= b.v; }
  friend bool operator>(CheckedInt128 a, CheckedInt128 b) { return a.v > b.v; }
  bool is_zero() const { return v == 0; }
};

inline BigInt to_bigint(const CheckedInt128& x) {
  bool neg = x.v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-static_cast<unsigned __int128>(x.v))
                              : static_cast<unsigned __int128>(x.v);
  BigInt hi = static_cast<std::uint64_t>(mag >> 64);
  BigInt lo = static_cast<std::uint64_t>(mag);
  BigInt r = (hi << 64) | lo;
  return neg ? -r : r;
}

// ---------------------------------------------------------------------------
// Integer-scaled inequality rows: a . z <= b with int64 entries.
// ---------------------------------------------------------------------------

struct IntRow {
  std::vector<long long> a;
  long long b = 0;
};

/// Clears denominators and divides by the gcd. Returns nothing if the scaled
/// coefficients do not fit in int64.
std::optional<IntRow> scale_row(const VectorR& coeffs, const Rational& rhs);

// ---------------------------------------------------------------------------
// Exact rank of a set of rational vectors (Gaussian elimination over Q).
// Incremental form so callers can stream vectors in.
// ---------------------------------------------------------------------------

class RationalRankAccumulator {
 public:
  explicit RationalRankAccumulator(int dim) : dim_(dim) {}

  /// Reduces v against the current basis; returns true (and absorbs the
  /// remainder) if v was independent.
  bool add(VectorR v);

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  std::vector<VectorR> rows_;  // echelon rows
  std::vector<int> pivots_;    // pivot column per row
};

/// rank of {p_i - p_0} over all points. Points are dense rational vectors of
/// equal size; result is the affine dimension of the set.
int affine_rank(const std::vector<VectorR>& points);

// ---------------------------------------------------------------------------
// Vertex enumeration of {z : rows.a z <= rows.b} by exhaustive enumeration of
// independent dim-subsets, one exact solve per basis. The polytope must be
// bounded (callers establish that separately). Vertices come back
// deduplicated in lexicographic order.
// ---------------------------------------------------------------------------

std::vector<VectorR> enumerate_h_vertices(const std::vector<IntRow>& rows, int dim);

/// Rational-row variant for systems whose integer scaling overflows int64.
std::vector<VectorR> enumerate_h_vertices_rational(const std::vector<VectorR>& lhs,
                                                   const std::vector<Rational>& rhs, int dim);

}  // namespace ucpoly
