// Slow reference implementations used to cross-check the library. They work
// straight from the Cartan matrix and avoid WeylGroup, the DP and the lifting
// recursion.
#pragma once

#include "eqs/poly.hpp"
#include "eqs/root_system.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace oracle {

using eqs::IntMatrix;
using eqs::IntVector;

inline IntMatrix reflection(const IntMatrix& cartan, int i) {
  const int r = static_cast<int>(cartan.rows());
  IntMatrix m = IntMatrix::Identity(r, r);
  for (int j = 0; j < r; ++j) m(i - 1, j) -= cartan(i - 1, j);
  return m;
}

inline bool positive(const IntVector& x) { return (x.array() >= 0).all(); }

inline std::vector<int> key(const IntMatrix& m) { return {m.data(), m.data() + m.size()}; }

// Multiplying m by s_i on the right lengthens m iff m(alpha_i) > 0.
inline bool lengthens(const IntMatrix& m, int i) { return positive(m.col(i - 1)); }

inline IntMatrix product(const IntMatrix& cartan, const std::vector<int>& word) {
  const int r = static_cast<int>(cartan.rows());
  IntMatrix m = IntMatrix::Identity(r, r);
  for (int i : word) m = m * reflection(cartan, i);
  return m;
}

inline bool is_reduced(const IntMatrix& cartan, const std::vector<int>& word) {
  const int r = static_cast<int>(cartan.rows());
  IntMatrix m = IntMatrix::Identity(r, r);
  for (int i : word) {
    if (!lengthens(m, i)) return false;
    m = m * reflection(cartan, i);
  }
  return true;
}

// Peel right descents until the identity is reached.
inline std::vector<int> reduced_word(const IntMatrix& cartan, IntMatrix m) {
  const int r = static_cast<int>(cartan.rows());
  std::vector<int> rev;
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= r && !descent; ++i) {
      if (!lengthens(m, i)) descent = i;
    }
    if (!descent) break;
    rev.push_back(descent);
    m = m * reflection(cartan, descent);
  }
  return {rev.rbegin(), rev.rend()};
}

// Every reduced subword J of `word`, keyed by the matrix of its product, summed
// as prod_{k in J} r_k with r_k the k-th prefix root of the whole word.
inline std::map<std::vector<int>, eqs::Poly> naive_column(const IntMatrix& cartan, const std::vector<int>& word) {
  const int r = static_cast<int>(cartan.rows());
  const std::size_t m = word.size();
  std::vector<eqs::Poly> roots;
  IntMatrix prefix = IntMatrix::Identity(r, r);
  for (int i : word) {
    eqs::Poly root(r);
    for (int j = 0; j < r; ++j) {
      if (prefix(j, i - 1) != 0) root += eqs::Poly::variable(r, j + 1) * eqs::BigInt(prefix(j, i - 1));
    }
    roots.push_back(root);
    prefix = prefix * reflection(cartan, i);
  }
  std::map<std::vector<int>, eqs::Poly> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    IntMatrix q = IntMatrix::Identity(r, r);
    eqs::Poly term = eqs::Poly::one(r);
    bool reduced = true;
    for (std::size_t k = 0; k < m && reduced; ++k) {
      if (!(mask >> k & 1)) continue;
      if (!lengthens(q, word[k])) reduced = false;
      q = q * reflection(cartan, word[k]);
      term *= roots[k];
    }
    if (!reduced) continue;
    auto [it, fresh] = out.try_emplace(key(q), r);
    it->second += term;
  }
  return out;
}

// w <= v iff some subword of a reduced word of v is a reduced word of w.
inline bool subword_leq(const IntMatrix& cartan, const IntMatrix& w, const IntMatrix& v) {
  const std::vector<int> word = reduced_word(cartan, v);
  const std::size_t m = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask >> k & 1) sub.push_back(word[k]);
    }
    if (is_reduced(cartan, sub) && product(cartan, sub) == w) return true;
  }
  return false;
}

// p in conv(points), by Caratheodory: p lies in the hull of some affinely
// independent subset, where barycentric coordinates come from exact Gaussian
// elimination.
inline bool hull_contains(const std::vector<std::vector<int>>& points, const std::vector<int>& p) {
  const std::size_t d = p.size();
  const std::size_t n = points.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) idx.push_back(k);
    if (idx.size() > d + 1) continue;
    // Rows: d coordinates plus the affine row; columns: lambdas plus rhs.
    const std::size_t cols = idx.size();
    std::vector<std::vector<eqs::Rational>> a(d + 1, std::vector<eqs::Rational>(cols + 1));
    for (std::size_t row = 0; row < d; ++row) {
      for (std::size_t c = 0; c < cols; ++c) a[row][c] = points[idx[c]][row];
      a[row][cols] = p[row];
    }
    for (std::size_t c = 0; c < cols; ++c) a[d][c] = 1;
    a[d][cols] = 1;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && rank <= d; ++c) {
      std::size_t piv = rank;
      while (piv <= d && a[piv][c] == 0) ++piv;
      if (piv > d) continue;
      std::swap(a[piv], a[rank]);
      for (std::size_t row = 0; row <= d; ++row) {
        if (row == rank || a[row][c] == 0) continue;
        const eqs::Rational f = a[row][c] / a[rank][c];
        for (std::size_t k = c; k <= cols; ++k) a[row][k] -= f * a[rank][k];
      }
      pivot_col.push_back(c);
      ++rank;
    }
    if (rank < cols) continue;  // affinely dependent subset; a smaller one covers it
    bool consistent = true;
    for (std::size_t row = rank; row <= d; ++row) consistent = consistent && a[row][cols] == 0;
    if (!consistent) continue;
    bool nonneg = true;
    for (std::size_t k = 0; k < rank; ++k) nonneg = nonneg && a[k][cols] / a[k][pivot_col[k]] >= 0;
    if (nonneg) return true;
  }
  return false;
}

// SNP by brute force over the bounding box with the hull oracle above.
inline bool snp(const eqs::Poly& f) {
  std::vector<std::vector<int>> pts;
  for (const auto& [m, c] : f.terms()) pts.push_back(m.exponents(f.rank()));
  if (pts.empty()) return true;
  const std::size_t d = pts.front().size();
  std::vector<int> lo = pts.front(), hi = pts.front();
  for (const auto& q : pts) {
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], q[k]);
      hi[k] = std::max(hi[k], q[k]);
    }
  }
  std::vector<int> p = lo;
  for (;;) {
    if (std::find(pts.begin(), pts.end(), p) == pts.end() && hull_contains(pts, p)) return false;
    std::size_t k = d;
    while (k > 0 && p[k - 1] == hi[k - 1]) {
      p[k - 1] = lo[k - 1];
      --k;
    }
    if (k == 0) return true;
    ++p[k - 1];
  }
}

// Poincare polynomial prod_i (1 + q + ... + q^{d_i - 1}) from the degrees.
inline std::vector<long> poincare(const std::vector<int>& degrees) {
  std::vector<long> poly{1};
  for (int deg : degrees) {
    std::vector<long> next(poly.size() + static_cast<std::size_t>(deg) - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (int j = 0; j < deg; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
    poly = next;
  }
  return poly;
}

}  // namespace oracle
