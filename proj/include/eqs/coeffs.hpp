#pragma once

#include "eqs/restriction.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace eqs {

struct CoeffMeta {
  bool degree_ok = true;   // homogeneous of degree l(u)+l(v)-l(w) when nonzero
  bool positive = true;    // nonnegative coefficients
  int solve_index = -1;    // position of w in the solve order, -1 if w is outside the support set
};

struct CoeffResult {
  ElementId u = 0;
  ElementId v = 0;
  ElementId w = 0;
  Poly value;
  CoeffMeta meta;
};

// xi_u * xi_v = sum over z in `support` of values[k] * xi_z, where the support
// set is {z : u <= z, v <= z, l(z) <= l(u)+l(v)} in solve order (length, then
// element key).
struct Expansion {
  std::vector<ElementId> support;
  std::vector<Poly> values;
  std::vector<CoeffMeta> meta;

  // Null when z is outside the support set (the coefficient is zero).
  const Poly* find(ElementId z) const;
  std::ptrdiff_t index_of(ElementId z) const;
};

// Solves the triangular system given by evaluating the product at each z in
// the support set, dividing by xi_z|_z one prefix root at a time. Expansions
// are memoized per unordered pair {u, v}. Thread safe.
class CoeffSolver {
 public:
  explicit CoeffSolver(std::shared_ptr<const RestrictionTable> table);

  const RestrictionTable& table() const { return *table_; }
  const WeylGroup& group() const { return table_->group(); }
  int rank() const { return table_->rank(); }

  std::shared_ptr<const Expansion> expansion(ElementId u, ElementId v) const;
  CoeffResult coeff(ElementId u, ElementId v, ElementId w) const;
  Poly value(ElementId u, ElementId v, ElementId w) const;

  // The solve behind expansion(), bypassing the memo.
  Expansion solve(ElementId u, ElementId v) const;

 private:
  std::shared_ptr<const RestrictionTable> table_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const Expansion>> cache_;
};

// Group, restriction table and coefficient solver for one root system.
struct Engine {
  std::shared_ptr<const WeylGroup> group;
  std::shared_ptr<const RestrictionTable> table;
  std::shared_ptr<const CoeffSolver> solver;

  static Engine create(const TypeLabel& label, std::size_t bound = kDefaultEnumerationBound);

  const RootSystem& root_system() const { return group->root_system(); }
  const TypeLabel& label() const { return group->root_system().label(); }
  char glyph() const { return display_glyph(label().family()); }
};

// Generic two-sided comparison; `exponent` is the power of two relating the
// sides when one applies, else 0.
struct IdentityReport {
  Poly lhs;
  Poly rhs;
  bool equal = false;
  int exponent = 0;
};

// C_{v,w}^v against xi_w|_v.
IdentityReport coeff_identity_check(const CoeffSolver& solver, ElementId v, ElementId w);

// sum_w C_{u,v}^w xi_w|_x against xi_u|_x * xi_v|_x.
IdentityReport defining_identity_check(const CoeffSolver& solver, ElementId u, ElementId v, ElementId x);

bool nonvanishing_coeff(const CoeffSolver& solver, ElementId u, ElementId v, ElementId w);

}  // namespace eqs
