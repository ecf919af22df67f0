#include "ucpoly/linalg.hpp"

#include <algorithm>
#include <map>

namespace ucpoly {

std::optional<IntRow> scale_row(const VectorR& coeffs, const Rational& rhs) {
  BigInt lcm = den(rhs);
  for (int j = 0; j < coeffs.size(); ++j) lcm = boost::multiprecision::lcm(lcm, den(coeffs[j]));
  BigInt g = 0;
  std::vector<BigInt> scaled(static_cast<size_t>(coeffs.size()) + 1);
  for (int j = 0; j < coeffs.size(); ++j) {
    scaled[static_cast<size_t>(j)] = num(coeffs[j]) * (lcm / den(coeffs[j]));
    g = boost::multiprecision::gcd(g, scaled[static_cast<size_t>(j)]);
  }
  scaled.back() = num(rhs) * (lcm / den(rhs));
  g = boost::multiprecision::gcd(g, scaled.back());
  if (g == 0) g = 1;

  const BigInt lo = std::numeric_limits<long long>::min();
  const BigInt hi = std::numeric_limits<long long>::max();
  IntRow row;
  row.a.resize(static_cast<size_t>(coeffs.size()));
  for (size_t j = 0; j < scaled.size(); ++j) {
    BigInt v = scaled[j] / g;
    if (v < lo || v > hi) return std::nullopt;
    if (j + 1 == scaled.size()) row.b = v.convert_to<long long>();
    else row.a[j] = v.convert_to<long long>();
  }
  return row;
}

bool RationalRankAccumulator::add(VectorR v) {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational coef = v[pivots_[r]];
    if (coef != 0) v -= (coef / rows_[r][pivots_[r]]) * rows_[r];
  }
  for (int j = 0; j < dim_; ++j) {
    if (v[j] != 0) {
      pivots_.push_back(j);
      rows_.push_back(std::move(v));
      return true;
    }
  }
  return false;
}

int affine_rank(const std::vector<VectorR>& points) {
  if (points.empty()) throw std::invalid_argument("affine_rank needs at least one point");
  RationalRankAccumulator acc(static_cast<int>(points[0].size()));
  for (size_t i = 1; i < points.size(); ++i) {
    if (acc.rank() == points[0].size()) break;
    acc.add(points[i] - points[0]);
  }
  return acc.rank();
}

namespace {

using BigIntPlain =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline bool is_zero(const CheckedInt128& x) { return x.is_zero(); }
inline bool is_zero(const BigIntPlain& x) { return x.is_zero(); }

inline BigInt widen(const CheckedInt128& x) { return to_bigint(x); }
inline BigInt widen(const BigIntPlain& x) { return BigInt(x); }

constexpr int kMaxDim = 18;   // 3T-1 for T <= 6, plus slack
constexpr int kMaxCols = 19;  // augmented with the rhs

template <typename S>
struct BasisEnumerator {
  int dim;
  int ncols;
  const std::vector<std::array<S, kMaxCols>>& rows;
  std::array<std::array<S, kMaxCols>, kMaxDim> echelon;
  std::array<int, kMaxDim> pivot_col{};
  std::array<S, kMaxDim> pivots;
  int depth = 0;
  std::map<std::vector<Rational>, bool>* found;

  BasisEnumerator(int d, const std::vector<std::array<S, kMaxCols>>& r,
                  std::map<std::vector<Rational>, bool>* out)
      : dim(d), ncols(d + 1), rows(r), found(out) {}

  // Bareiss sweep of rows[idx] into the next echelon slot; returns the pivot
  // column or -1 when dependent. Divisions are exact (Sylvester identity).
  int reduce_into_slot(size_t idx) {
    auto& v = echelon[static_cast<size_t>(depth)];
    const auto& src = rows[idx];
    for (int j = 0; j < ncols; ++j) v[static_cast<size_t>(j)] = src[static_cast<size_t>(j)];
    for (int k = 0; k < depth; ++k) {
      const S vk = v[static_cast<size_t>(pivot_col[static_cast<size_t>(k)])];
      const S& piv = pivots[static_cast<size_t>(k)];
      const S prev = k == 0 ? S(1) : pivots[static_cast<size_t>(k - 1)];
      const auto& e = echelon[static_cast<size_t>(k)];
      if (is_zero(vk)) {
        for (int j = 0; j < ncols; ++j) {
          S& cell = v[static_cast<size_t>(j)];
          cell = piv * cell / prev;
        }
      } else {
        for (int j = 0; j < ncols; ++j) {
          S& cell = v[static_cast<size_t>(j)];
          cell = (piv * cell - vk * e[static_cast<size_t>(j)]) / prev;
        }
      }
    }
    for (int j = 0; j < dim; ++j)
      if (!is_zero(v[static_cast<size_t>(j)])) return j;
    return -1;
  }

  void solve_leaf() {
    const S det = pivots[static_cast<size_t>(dim - 1)];
    std::array<S, kMaxDim> w;
    for (int i = dim - 1; i >= 0; --i) {
      S acc = echelon[static_cast<size_t>(i)][static_cast<size_t>(dim)] * det;
      for (int j = i + 1; j < dim; ++j)
        acc = acc - echelon[static_cast<size_t>(i)][static_cast<size_t>(pivot_col[static_cast<size_t>(j)])] *
                        w[static_cast<size_t>(j)];
      w[static_cast<size_t>(i)] = acc / pivots[static_cast<size_t>(i)];
    }
    S D = det;
    if (D < S(0)) {
      D = -D;
      for (int i = 0; i < dim; ++i) w[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)];
    }

    for (size_t r = 0; r < rows.size(); ++r) {
      S lhs(0);
      for (int j = 0; j < dim; ++j)
        lhs = lhs + rows[r][static_cast<size_t>(pivot_col[static_cast<size_t>(j)])] *
                        w[static_cast<size_t>(j)];
      if (rows[r][static_cast<size_t>(dim)] * D < lhs) return;
    }

    std::vector<Rational> vert(static_cast<size_t>(dim));
    BigInt Dq = widen(D);
    for (int j = 0; j < dim; ++j)
      vert[static_cast<size_t>(pivot_col[static_cast<size_t>(j)])] =
          Rational(widen(w[static_cast<size_t>(j)]), Dq);
    found->emplace(std::move(vert), true);
  }

  void dfs(size_t next) {
    if (depth == dim) {
      solve_leaf();
      return;
    }
    size_t need = static_cast<size_t>(dim - depth);
    if (rows.size() - next < need) return;
    dfs(next + 1);
    int pc = reduce_into_slot(next);
    if (pc < 0) return;
    pivot_col[static_cast<size_t>(depth)] = pc;
    pivots[static_cast<size_t>(depth)] = echelon[static_cast<size_t>(depth)][static_cast<size_t>(pc)];
    ++depth;
    dfs(next + 1);
    --depth;
  }
};

template <typename S>
std::vector<VectorR> enumerate_vertices_impl(const std::vector<std::array<S, kMaxCols>>& rows,
                                             int dim) {
  std::map<std::vector<Rational>, bool> found;
  BasisEnumerator<S> en(dim, rows, &found);
  if (!rows.empty()) en.dfs(0);
  std::vector<VectorR> out;
  out.reserve(found.size());
  for (const auto& [v, _] : found) {
    VectorR p(dim);
    for (int j = 0; j < dim; ++j) p[j] = v[static_cast<size_t>(j)];
    out.push_back(std::move(p));
  }
  return out;  // map order is lexicographic already
}

template <typename S>
std::vector<std::array<S, kMaxCols>> pack_rows(const std::vector<IntRow>& rows, int dim) {
  std::vector<std::array<S, kMaxCols>> packed;
  packed.reserve(rows.size());
  for (const auto& r : rows) {
    std::array<S, kMaxCols> row;
    for (int j = 0; j < dim; ++j) row[static_cast<size_t>(j)] = S(r.a[static_cast<size_t>(j)]);
    row[static_cast<size_t>(dim)] = S(r.b);
    packed.push_back(std::move(row));
  }
  return packed;
}

}  // namespace

std::vector<VectorR> enumerate_h_vertices(const std::vector<IntRow>& rows, int dim) {
  try {
    auto r128 = pack_rows<CheckedInt128>(rows, dim);
    return enumerate_vertices_impl<CheckedInt128>(r128, dim);
  } catch (const Int128Overflow&) {
    auto rbig = pack_rows<BigIntPlain>(rows, dim);
    return enumerate_vertices_impl<BigIntPlain>(rbig, dim);
  }
}

std::vector<VectorR> enumerate_h_vertices_rational(const std::vector<VectorR>& lhs,
                                                   const std::vector<Rational>& rhs, int dim) {
  std::vector<std::array<BigIntPlain, kMaxCols>> rbig;
  rbig.reserve(lhs.size());
  for (size_t i = 0; i < lhs.size(); ++i) {
    BigInt lcm = den(rhs[i]);
    for (int j = 0; j < dim; ++j) lcm = boost::multiprecision::lcm(lcm, den(lhs[i][j]));
    std::array<BigIntPlain, kMaxCols> row;
    for (int j = 0; j < dim; ++j)
      row[static_cast<size_t>(j)] = BigIntPlain(num(lhs[i][j]) * (lcm / den(lhs[i][j])));
    row[static_cast<size_t>(dim)] = BigIntPlain(num(rhs[i]) * (lcm / den(rhs[i])));
    rbig.push_back(std::move(row));
  }
  return enumerate_vertices_impl<BigIntPlain>(rbig, dim);
}

}  // namespace ucpoly
