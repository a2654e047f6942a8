#include "eqs/newton.hpp"

#include "eqs/exact_lp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eqs {

namespace {

int coordinate_sum(const LatticePoint& p) { return std::accumulate(p.begin(), p.end(), 0); }

}  // namespace

bool in_convex_hull(std::span<const LatticePoint> points, const LatticePoint& p) {
  if (points.empty()) return false;
  const std::size_t dim = p.size();
  for (const auto& q : points) {
    if (q.size() != dim) throw std::invalid_argument("points of different dimension");
    if (q == p) return true;
  }
  for (std::size_t k = 0; k < dim; ++k) {
    const auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                              [k](const auto& x, const auto& y) { return x[k] < y[k]; });
    if (p[k] < (*lo)[k] || p[k] > (*hi)[k]) return false;
  }

  // sum_j lambda_j q_j = p, sum_j lambda_j = 1, lambda >= 0.
  FeasibilityProblem<Rational> lp(dim + 1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t k = 0; k < dim; ++k) lp.a(k, j) = points[j][k];
    lp.a(dim, j) = 1;
  }
  for (std::size_t k = 0; k < dim; ++k) lp.b(k) = p[k];
  lp.b(dim) = 1;
  return lp.feasible();
}

NewtonPolytope newton_polytope(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no Newton polytope");
  NewtonPolytope out;
  for (const auto& [m, c] : f.terms()) out.support.push_back(m.exponents(f.rank()));
  for (std::size_t k = 0; k < out.support.size(); ++k) {
    std::vector<LatticePoint> others;
    others.reserve(out.support.size() - 1);
    for (std::size_t j = 0; j < out.support.size(); ++j) {
      if (j != k) others.push_back(out.support[j]);
    }
    if (!in_convex_hull(others, out.support[k])) out.vertices.push_back(out.support[k]);
  }
  return out;
}

SnpResult snp_test(const Poly& f) {
  SnpResult result;
  if (f.is_zero()) return result;
  const int rank = f.rank();
  std::vector<LatticePoint> support;
  for (const auto& [m, c] : f.terms()) support.push_back(m.exponents(rank));
  const std::set<LatticePoint> present(support.begin(), support.end());

  LatticePoint lo = support.front();
  LatticePoint hi = support.front();
  for (const auto& p : support) {
    for (int k = 0; k < rank; ++k) {
      lo[static_cast<std::size_t>(k)] = std::min(lo[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k)]);
      hi[static_cast<std::size_t>(k)] = std::max(hi[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k)]);
    }
  }
  // A homogeneous support spans a hull inside one degree slice.
  const PolyProps props = poly_props(f);

  LatticePoint p = lo;
  while (true) {
    if (!present.count(p) && (!props.homogeneous || coordinate_sum(p) == props.total_degree) &&
        in_convex_hull(support, p)) {
      result.saturated = false;
      result.witness = p;
      return result;
    }
    int k = rank - 1;
    while (k >= 0 && p[static_cast<std::size_t>(k)] == hi[static_cast<std::size_t>(k)]) {
      p[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)];
      --k;
    }
    if (k < 0) break;
    ++p[static_cast<std::size_t>(k)];
  }
  return result;
}

}  // namespace eqs
