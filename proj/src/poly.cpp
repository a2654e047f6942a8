#include "eqs/poly.hpp"

#include <map>
#include <string>

namespace eqs {

RationalPoly to_rational(const Poly& p) {
  std::vector<RationalPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, Rational(c));
  return RationalPoly::from_terms(p.rank(), std::move(terms));
}

std::optional<Poly> to_integral(const RationalPoly& p) {
  std::vector<Poly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    if (c.get_den() != 1) return std::nullopt;
    terms.emplace_back(m, c.get_num());
  }
  return Poly::from_terms(p.rank(), std::move(terms));
}

Poly LinearForm::to_poly() const {
  std::vector<Poly::Term> terms;
  for (int i = 0; i < rank(); ++i) {
    const int c = coeffs[static_cast<std::size_t>(i)];
    if (c != 0) terms.emplace_back(Monomial::variable(i), BigInt(c));
  }
  return Poly::from_terms(rank(), std::move(terms));
}

VariableMap::VariableMap(int source_rank, int target_rank)
    : source_rank_(source_rank), target_rank_(target_rank), images_(static_cast<std::size_t>(source_rank)) {
  if (source_rank < 0 || source_rank > kMaxVariables || target_rank < 0 || target_rank > kMaxVariables) {
    throw std::invalid_argument("variable map rank out of range");
  }
}

void VariableMap::set(int source_var, LinearForm image) {
  if (source_var < 1 || source_var > source_rank_) throw std::out_of_range("source variable out of range");
  if (image.rank() != target_rank_) throw RankMismatch("image rank differs from target rank");
  images_[static_cast<std::size_t>(source_var - 1)] = std::move(image);
}

void VariableMap::set_scaled(int source_var, int target_var, int scale) {
  if (target_var < 1 || target_var > target_rank_) throw std::out_of_range("target variable out of range");
  std::vector<int> c(static_cast<std::size_t>(target_rank_), 0);
  c[static_cast<std::size_t>(target_var - 1)] = scale;
  set(source_var, LinearForm(std::move(c)));
}

const std::optional<LinearForm>& VariableMap::image(int source_var) const {
  if (source_var < 1 || source_var > source_rank_) throw std::out_of_range("source variable out of range");
  return images_[static_cast<std::size_t>(source_var - 1)];
}

VariableMap VariableMap::identity(int rank) {
  VariableMap m(rank, rank);
  for (int i = 1; i <= rank; ++i) m.set_scaled(i, i);
  return m;
}

VariableMap VariableMap::bar(int rank) {
  VariableMap m(rank, rank);
  for (int i = 1; i <= rank; ++i) m.set_scaled(i, i, i == 1 ? 2 : 1);
  return m;
}

namespace {

// Image is c * x_t for a single target variable t.
struct ScaledVariable {
  int target = -1;
  long scale = 0;
};

std::optional<ScaledVariable> as_scaled_variable(const LinearForm& form) {
  ScaledVariable out;
  for (int i = 0; i < form.rank(); ++i) {
    const int c = form.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (out.target >= 0) return std::nullopt;
    out.target = i;
    out.scale = c;
  }
  if (out.target < 0) return std::nullopt;
  return out;
}

}  // namespace

Poly substitute(const Poly& f, const VariableMap& map) {
  if (f.rank() != map.source_rank()) throw RankMismatch("polynomial rank differs from map source rank");
  const int src = map.source_rank();
  const int dst = map.target_rank();

  for (const auto& [m, c] : f.terms()) {
    for (int v = 0; v < src; ++v) {
      if (m.exponent(v) != 0 && !map.image(v + 1)) {
        throw UnmappedVariable("variable " + std::to_string(v + 1) + " has no image");
      }
    }
  }

  std::vector<std::optional<ScaledVariable>> scaled(static_cast<std::size_t>(src));
  bool all_scaled = true;
  for (int v = 0; v < src; ++v) {
    if (const auto& img = map.image(v + 1)) {
      scaled[static_cast<std::size_t>(v)] = as_scaled_variable(*img);
      if (!scaled[static_cast<std::size_t>(v)]) all_scaled = false;
    }
  }

  if (all_scaled) {
    std::vector<Poly::Term> terms;
    terms.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
      std::vector<int> exps(static_cast<std::size_t>(dst), 0);
      BigInt coeff = c;
      for (int v = 0; v < src; ++v) {
        const int e = m.exponent(v);
        if (e == 0) continue;
        const auto& s = *scaled[static_cast<std::size_t>(v)];
        exps[static_cast<std::size_t>(s.target)] += e;
        BigInt factor;
        mpz_pow_ui(factor.get_mpz_t(), BigInt(s.scale).get_mpz_t(), static_cast<unsigned long>(e));
        coeff *= factor;
      }
      terms.emplace_back(Monomial::from_exponents(exps), std::move(coeff));
    }
    return Poly::from_terms(dst, std::move(terms));
  }

  // General linear images: expand with cached powers.
  std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(src));
  auto power = [&](int v, int e) -> const Poly& {
    auto& cache = powers[static_cast<std::size_t>(v)];
    if (cache.empty()) cache.push_back(Poly::one(dst));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * map.image(v + 1)->to_poly());
    return cache[static_cast<std::size_t>(e)];
  };
  Poly out(dst);
  for (const auto& [m, c] : f.terms()) {
    Poly term = Poly::constant(dst, c);
    for (int v = 0; v < src; ++v) {
      const int e = m.exponent(v);
      if (e != 0) term *= power(v, e);
    }
    out += term;
  }
  return out;
}

namespace {

int pivot_variable(const LinearForm& divisor) {
  for (int i = 0; i < divisor.rank(); ++i) {
    if (divisor.coeffs[static_cast<std::size_t>(i)] != 0) return i;
  }
  throw std::invalid_argument("division by the zero linear form");
}

}  // namespace

RationalPoly divide_by_linear_rational(const Poly& f, const LinearForm& divisor) {
  if (f.rank() != divisor.rank()) throw RankMismatch("dividend and divisor ranks differ");
  const int rank = f.rank();
  const int p = pivot_variable(divisor);
  const Rational lead(divisor.coeffs[static_cast<std::size_t>(p)]);

  // Divisor = lead * x_p + rest, with rest free of x_p.
  std::vector<RationalPoly::Term> rest_terms;
  for (int i = p + 1; i < rank; ++i) {
    const int c = divisor.coeffs[static_cast<std::size_t>(i)];
    if (c != 0) rest_terms.emplace_back(Monomial::variable(i), Rational(c));
  }
  const RationalPoly rest = RationalPoly::from_terms(rank, std::move(rest_terms));

  // Slices of f by the exponent of x_p, with x_p removed.
  int top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, m.exponent(p));
  std::vector<std::vector<RationalPoly::Term>> slice_terms(static_cast<std::size_t>(top) + 1);
  for (const auto& [m, c] : f.terms()) {
    slice_terms[static_cast<std::size_t>(m.exponent(p))].emplace_back(m.with_exponent(p, 0), Rational(c));
  }
  std::vector<RationalPoly> slices;
  slices.reserve(slice_terms.size());
  for (auto& t : slice_terms) slices.push_back(RationalPoly::from_terms(rank, std::move(t)));

  if (f.is_zero()) return RationalPoly(rank);

  // f_k = lead * q_{k-1} + rest * q_k, k = top..0, with q_top = 0.
  std::vector<RationalPoly> q(static_cast<std::size_t>(top) + 1, RationalPoly(rank));
  const Rational inv_lead = Rational(1) / lead;
  for (int k = top; k >= 1; --k) {
    RationalPoly numer = slices[static_cast<std::size_t>(k)] - rest * q[static_cast<std::size_t>(k)];
    numer *= inv_lead;
    q[static_cast<std::size_t>(k - 1)] = std::move(numer);
  }
  if (!(slices[0] == rest * q[0])) throw NonExactDivision("linear form does not divide polynomial");

  std::vector<RationalPoly::Term> out;
  for (int k = 0; k < top; ++k) {
    for (const auto& [m, c] : q[static_cast<std::size_t>(k)].terms()) out.emplace_back(m.with_exponent(p, k), c);
  }
  return RationalPoly::from_terms(rank, std::move(out));
}

Poly divide_exact_by_linear(const Poly& f, const LinearForm& divisor) {
  auto q = to_integral(divide_by_linear_rational(f, divisor));
  if (!q) throw NonIntegralQuotient("quotient has non-integral coefficients");
  return std::move(*q);
}

Divisibility divisibility_test(const Poly& f, const LinearForm& divisor) {
  try {
    const auto q = divide_by_linear_rational(f, divisor);
    return {true, to_integral(q).has_value()};
  } catch (const NonExactDivision&) {
    return {false, false};
  }
}

PolyProps poly_props(const Poly& f) {
  PolyProps props;
  for (const auto& [m, c] : f.terms()) {
    if (c < 0) props.nonneg = false;
    const int d = m.degree();
    if (props.total_degree >= 0 && d != props.total_degree) props.homogeneous = false;
    props.total_degree = std::max(props.total_degree, d);
  }
  return props;
}

Poly scale_pow2(const Poly& f, int k) {
  if (k < 0) throw std::invalid_argument("negative power of two");
  BigInt factor;
  mpz_ui_pow_ui(factor.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return f * factor;
}

}  // namespace eqs
