#pragma once

#include "eqs/coeffs.hpp"
#include "eqs/signed_permutation.hpp"

#include <string_view>

namespace eqs {

// Type B against type C under gamma_1 -> 2 beta_1:
//   C(X) = 2^e * bar(C(Y)),  e = s(w) - s(u) - s(v).
// Both sides are scaled to stay integral: lhs = 2^max(0,-e) C(X) and
// rhs = 2^max(0,e) bar(C(Y)).
struct BcReport {
  IdentityReport identity;
  Poly type_b;
  Poly type_c;
  bool integral = true;            // 2^e bar(C(Y)) has integer coefficients
  bool support_equal = true;       // same monomial support in b and c
  bool nonvanishing_equal = true;  // C(X) != 0 iff C(Y) != 0
  bool degree_matching = false;    // l(w) = l(u) + l(v), the non-equivariant stratum
  bool ok() const { return identity.equal && integral && support_equal && nonvanishing_equal; }
};

// `b` and `c` must be engines for B_n and C_n of the same rank.
BcReport bc_correspondence(const Engine& b, const Engine& c, const SignedPermutation& u,
                           const SignedPermutation& v, const SignedPermutation& w);

struct StrictPartition {
  std::vector<int> parts;

  int length() const { return static_cast<int>(parts.size()); }
  // Throws std::invalid_argument unless strictly decreasing, positive, and
  // inside an n-staircase.
  void validate(int n) const;
  // "3,2", "3 2", "" (empty partition).
  static StrictPartition parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
};

// Strict partitions fitting in n, ordered by size then lexicographically.
std::vector<StrictPartition> strict_partitions(int n);

// -lambda_1, ..., -lambda_l, then the unused values of 1..n ascending.
SignedPermutation w_lambda(int n, const StrictPartition& lambda);

enum class Grassmannian { OG, LG };
Grassmannian parse_grassmannian(std::string_view text);

// C_{lambda,mu}^nu computed on the full flag variety: B_n for OG, C_n for LG.
CoeffResult grassmann_coeff(const Engine& engine, const StrictPartition& lambda, const StrictPartition& mu,
                            const StrictPartition& nu);

// The OG/LG correspondence with exponent l(nu) - l(lambda) - l(mu).
BcReport oglg_correspondence(const Engine& b, const Engine& c, const StrictPartition& lambda,
                             const StrictPartition& mu, const StrictPartition& nu);

// psi(C_{u,v}^w(D)) against C_{u°,v°}^{w°}(E).
IdentityReport transport_coeff_check(const DynkinInclusion& inc, const Engine& source, const Engine& target,
                                     ElementId u, ElementId v, ElementId w);

}  // namespace eqs
