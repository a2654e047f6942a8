#pragma once

#include "eqs/coeffs.hpp"

#include <optional>

namespace eqs {

// Bruhat test; by the interval nonvanishing result this decides xi_w|_v != 0.
bool nonvanishing_restriction(const WeylGroup& g, ElementId w, ElementId v);

// Product of the prefix roots of v.
Poly restrict_diag(const RestrictionTable& table, ElementId v);

struct MonotonicityReport {
  Poly difference;            // xi_w|_{v'} - xi_w|_v
  bool nonneg = false;
  bool cover = false;         // v' covers v
  int exchange_index = -1;    // 1-based k from strong exchange; -1 unless a cover
  Poly coefficient;           // C_{w,v}^{v'} when a cover
  bool identity_holds = true; // difference = r_k * C_{w,v}^{v'}; vacuous when not a cover
  bool ok() const { return nonneg && identity_holds; }
};

// Requires w <= v <= v' (std::invalid_argument otherwise).
MonotonicityReport check_monotonicity(const CoeffSolver& solver, ElementId w, ElementId v, ElementId v2);

struct ArabiaReport {
  ElementId reflected = 0;  // s_alpha v
  Poly difference;          // xi_w|_{s_alpha v} - xi_w|_v
  bool divisible = false;
  bool integral = false;
};

ArabiaReport check_arabia(const RestrictionTable& table, ElementId w, ElementId v, const Root& alpha);

struct SquarefreeReport {
  std::size_t summands = 0;
  bool all_squarefree = true;
  bool sum_matches = true;  // the summands add up to xi_w|_v
};

// Enumerates the individual subword summands of xi_w|_v and checks that no
// root repeats inside any one of them.
SquarefreeReport squarefree_summand_audit(const RestrictionTable& table, ElementId w, ElementId v);

struct TransportReport {
  IdentityReport identity;           // psi(xi_w|_v) against xi_{w°}|_{v°}
  std::size_t vanishing_checked = 0; // target elements outside the parabolic checked at v°
  std::size_t vanishing_failures = 0;
  bool ok() const { return identity.equal && vanishing_failures == 0; }
};

// With `check_vanishing`, also confirms xi_x(E)|_{v°} = 0 for every x outside
// the parabolic subgroup of the image nodes.
TransportReport transport_restriction_check(const DynkinInclusion& inc, const RestrictionTable& source,
                                            const RestrictionTable& target, ElementId w, ElementId v,
                                            bool check_vanishing = true);

}  // namespace eqs
