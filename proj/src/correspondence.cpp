#include "eqs/correspondence.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace eqs {

namespace {

std::vector<Monomial> support_of(const Poly& f) {
  std::vector<Monomial> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) out.push_back(m);
  return out;
}

bool divisible_by_pow2(const Poly& f, int k) {
  for (const auto& [m, c] : f.terms()) {
    if (mpz_scan1(c.get_mpz_t(), 0) < static_cast<mp_bitcnt_t>(k)) return false;
  }
  return true;
}

BcReport compare_bc(const Poly& type_b, const Poly& type_c, int exponent, bool degree_matching) {
  BcReport r;
  r.type_b = type_b;
  r.type_c = type_c;
  r.degree_matching = degree_matching;
  const Poly barred = substitute(type_c, VariableMap::bar(type_c.rank()));
  r.identity.exponent = exponent;
  r.identity.lhs = scale_pow2(type_b, std::max(0, -exponent));
  r.identity.rhs = scale_pow2(barred, std::max(0, exponent));
  r.identity.equal = r.identity.lhs == r.identity.rhs;
  r.integral = exponent >= 0 || divisible_by_pow2(barred, -exponent);
  r.support_equal = support_of(type_b) == support_of(type_c);
  r.nonvanishing_equal = type_b.is_zero() == type_c.is_zero();
  return r;
}

void check_bc_pair(const Engine& b, const Engine& c) {
  if (b.label().family() != Family::B || c.label().family() != Family::C || b.label().rank() != c.label().rank()) {
    throw std::invalid_argument("expected engines for B_n and C_n of equal rank");
  }
}

}  // namespace

BcReport bc_correspondence(const Engine& b, const Engine& c, const SignedPermutation& u,
                           const SignedPermutation& v, const SignedPermutation& w) {
  check_bc_pair(b, c);
  const WeylGroup& gb = *b.group;
  const WeylGroup& gc = *c.group;
  const ElementId ub = id_from_one_line(gb, u), vb = id_from_one_line(gb, v), wb = id_from_one_line(gb, w);
  const ElementId uc = id_from_one_line(gc, u), vc = id_from_one_line(gc, v), wc = id_from_one_line(gc, w);
  const int exponent = sign_count(w) - sign_count(u) - sign_count(v);
  return compare_bc(b.solver->value(ub, vb, wb), c.solver->value(uc, vc, wc), exponent,
                    gb.length(wb) == gb.length(ub) + gb.length(vb));
}

void StrictPartition::validate(int n) const {
  if (length() > n) throw std::invalid_argument("partition " + to_string() + " has more than n parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1 || parts[i] > n) throw std::invalid_argument("partition " + to_string() + " does not fit in n");
    if (i > 0 && parts[i] >= parts[i - 1]) throw std::invalid_argument("partition " + to_string() + " is not strict");
  }
}

StrictPartition StrictPartition::parse(std::string_view text) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  StrictPartition p;
  std::string token;
  while (in >> token) {
    if (!std::all_of(token.begin(), token.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw std::invalid_argument("bad partition part '" + token + "'");
    }
    p.parts.push_back(std::stoi(token));
  }
  return p;
}

std::string StrictPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::vector<StrictPartition> strict_partitions(int n) {
  std::vector<StrictPartition> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    StrictPartition p;
    for (int k = n; k >= 1; --k) {
      if (mask & (1u << (k - 1))) p.parts.push_back(k);
    }
    out.push_back(std::move(p));
  }
  std::stable_sort(out.begin(), out.end(), [](const StrictPartition& a, const StrictPartition& b) {
    int sa = 0, sb = 0;
    for (int x : a.parts) sa += x;
    for (int x : b.parts) sb += x;
    return sa != sb ? sa < sb : a.parts < b.parts;
  });
  return out;
}

SignedPermutation w_lambda(int n, const StrictPartition& lambda) {
  lambda.validate(n);
  SignedPermutation w;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int part : lambda.parts) {
    w.entries.push_back(-part);
    used[static_cast<std::size_t>(part)] = true;
  }
  for (int k = 1; k <= n; ++k) {
    if (!used[static_cast<std::size_t>(k)]) w.entries.push_back(k);
  }
  return w;
}

Grassmannian parse_grassmannian(std::string_view text) {
  std::string s(text);
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s == "OG") return Grassmannian::OG;
  if (s == "LG") return Grassmannian::LG;
  throw std::invalid_argument("space must be OG or LG");
}

CoeffResult grassmann_coeff(const Engine& engine, const StrictPartition& lambda, const StrictPartition& mu,
                            const StrictPartition& nu) {
  const Family f = engine.label().family();
  if (f != Family::B && f != Family::C) throw std::invalid_argument("Grassmannian coefficients need type B or C");
  const int n = engine.label().rank();
  const WeylGroup& g = *engine.group;
  return engine.solver->coeff(id_from_one_line(g, w_lambda(n, lambda)), id_from_one_line(g, w_lambda(n, mu)),
                              id_from_one_line(g, w_lambda(n, nu)));
}

BcReport oglg_correspondence(const Engine& b, const Engine& c, const StrictPartition& lambda,
                             const StrictPartition& mu, const StrictPartition& nu) {
  check_bc_pair(b, c);
  const CoeffResult x = grassmann_coeff(b, lambda, mu, nu);
  const CoeffResult y = grassmann_coeff(c, lambda, mu, nu);
  const WeylGroup& g = *b.group;
  return compare_bc(x.value, y.value, nu.length() - lambda.length() - mu.length(),
                    g.length(x.w) == g.length(x.u) + g.length(x.v));
}

IdentityReport transport_coeff_check(const DynkinInclusion& inc, const Engine& source, const Engine& target,
                                     ElementId u, ElementId v, ElementId w) {
  const WeylGroup& gs = *source.group;
  const WeylGroup& gt = *target.group;
  IdentityReport r;
  r.lhs = substitute(source.solver->value(u, v, w), inc.substitution());
  r.rhs = target.solver->value(transport_element(inc, gs, gt, u), transport_element(inc, gs, gt, v),
                               transport_element(inc, gs, gt, w));
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace eqs
