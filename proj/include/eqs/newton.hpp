#pragma once

#include "eqs/poly.hpp"

#include <optional>
#include <span>
#include <vector>

namespace eqs {

using LatticePoint = std::vector<int>;

// Exact test of p in conv(points), by rational linear feasibility.
bool in_convex_hull(std::span<const LatticePoint> points, const LatticePoint& p);

struct NewtonPolytope {
  std::vector<LatticePoint> vertices;  // extreme points of the support
  std::vector<LatticePoint> support;   // descending graded-lex order

  bool contains(const LatticePoint& p) const { return in_convex_hull(vertices, p); }
};

// Throws std::invalid_argument for the zero polynomial.
NewtonPolytope newton_polytope(const Poly& f);

struct SnpResult {
  bool saturated = true;
  std::optional<LatticePoint> witness;  // hull lattice point with zero coefficient
};

// Lattice points of the support's bounding box are visited in lexicographic
// order; the first one inside the hull with a zero coefficient is the witness.
SnpResult snp_test(const Poly& f);

}  // namespace eqs
