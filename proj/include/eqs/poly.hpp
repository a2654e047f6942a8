#pragma once

#include "eqs/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eqs {

inline constexpr int kMaxVariables = 8;

class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exponent vector packed one byte per variable; variable 1 occupies the most
// significant byte so that comparing the packed word is lex order with
// x1 > x2 > ... . Total degree must stay below 256.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVariables)) {
      throw std::invalid_argument("monomial has too many variables");
    }
    Monomial m;
    int total = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
      total += exps[i];
      m.bits_ |= static_cast<std::uint64_t>(exps[i]) << shift(static_cast<int>(i));
    }
    if (total > 255) throw std::overflow_error("monomial degree exceeds 255");
    return m;
  }

  static Monomial variable(int var, int exponent = 1) {
    Monomial m;
    m.bits_ = static_cast<std::uint64_t>(exponent) << shift(var);
    return m;
  }

  // 0-based variable index.
  constexpr int exponent(int var) const { return static_cast<int>((bits_ >> shift(var)) & 0xffu); }

  constexpr int degree() const {
    return static_cast<int>((bits_ * 0x0101010101010101ULL) >> 56);
  }

  constexpr std::uint64_t bits() const { return bits_; }

  std::vector<int> exponents(int rank) const {
    std::vector<int> out(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) out[static_cast<std::size_t>(i)] = exponent(i);
    return out;
  }

  Monomial operator*(Monomial other) const {
    if (degree() + other.degree() > 255) throw std::overflow_error("monomial degree exceeds 255");
    Monomial m;
    m.bits_ = bits_ + other.bits_;
    return m;
  }

  Monomial with_exponent(int var, int e) const {
    Monomial m = *this;
    m.bits_ &= ~(std::uint64_t{0xff} << shift(var));
    m.bits_ |= static_cast<std::uint64_t>(e) << shift(var);
    return m;
  }

  friend constexpr bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }

  // Graded lex: higher degree first, then lex with x1 > x2 > ...
  friend constexpr bool grlex_greater(Monomial a, Monomial b) {
    const int da = a.degree();
    const int db = b.degree();
    return da != db ? da > db : a.bits_ > b.bits_;
  }

 private:
  static constexpr int shift(int var) { return 8 * (kMaxVariables - 1 - var); }
  std::uint64_t bits_ = 0;
};

// Sparse polynomial in `rank` variables. Terms are kept sorted in descending
// graded-lex order with no zero coefficients.
template <class Coeff>
class BasicPoly {
 public:
  using Term = std::pair<Monomial, Coeff>;

  explicit BasicPoly(int rank = 0) : rank_(rank) { check_rank(rank); }

  static BasicPoly constant(int rank, const Coeff& c) {
    BasicPoly p(rank);
    if (c != 0) p.terms_.emplace_back(Monomial{}, c);
    return p;
  }

  static BasicPoly one(int rank) { return constant(rank, Coeff(1)); }

  // 1-based variable index.
  static BasicPoly variable(int rank, int var, int exponent = 1) {
    if (var < 1 || var > rank) throw std::out_of_range("variable index out of range");
    BasicPoly p(rank);
    p.terms_.emplace_back(Monomial::variable(var - 1, exponent), Coeff(1));
    return p;
  }

  static BasicPoly from_terms(int rank, std::vector<Term> terms) {
    BasicPoly p(rank);
    for (const auto& [m, c] : terms) {
      for (int v = rank; v < kMaxVariables; ++v) {
        if (m.exponent(v) != 0) throw RankMismatch("monomial uses a variable beyond the rank");
      }
    }
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Coeff coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial key) { return grlex_greater(t.first, key); });
    if (it != terms_.end() && it->first == m) return it->second;
    return Coeff(0);
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }

  BasicPoly& operator+=(const BasicPoly& o) { return *this = merge(*this, o, false); }
  BasicPoly& operator-=(const BasicPoly& o) { return *this = merge(*this, o, true); }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }
  BasicPoly& operator*=(const Coeff& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) { return merge(a, b, false); }
  friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) { return merge(a, b, true); }
  friend BasicPoly operator-(BasicPoly a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend BasicPoly operator*(BasicPoly a, const Coeff& c) { return a *= c; }
  friend BasicPoly operator*(const Coeff& c, BasicPoly a) { return a *= c; }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    same_rank(a, b);
    BasicPoly out(a.rank_);
    if (a.is_zero() || b.is_zero()) return out;
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.terms_.emplace_back(ma * mb, ca * cb);
    }
    out.normalize();
    return out;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  static void check_rank(int rank) {
    if (rank < 0 || rank > kMaxVariables) throw std::invalid_argument("polynomial rank out of range");
  }

  static void same_rank(const BasicPoly& a, const BasicPoly& b) {
    if (a.rank_ != b.rank_) throw RankMismatch("polynomial rank mismatch");
  }

  static BasicPoly merge(const BasicPoly& a, const BasicPoly& b, bool subtract) {
    same_rank(a, b);
    BasicPoly out(a.rank_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && grlex_greater(ia->first, ib->first))) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || grlex_greater(ib->first, ia->first)) {
        out.terms_.emplace_back(ib->first, subtract ? Coeff(-ib->second) : ib->second);
        ++ib;
      } else {
        Coeff c = subtract ? Coeff(ia->second - ib->second) : Coeff(ia->second + ib->second);
        if (c != 0) out.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grlex_greater(x.first, y.first); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      std::size_t j = i + 1;
      Coeff sum = terms_[i].second;
      while (j < terms_.size() && terms_[j].first == terms_[i].first) sum += terms_[j++].second;
      if (sum != 0) {
        terms_[out].first = terms_[i].first;
        terms_[out].second = std::move(sum);
        ++out;
      }
      i = j;
    }
    terms_.resize(out);
  }

  int rank_ = 0;
  std::vector<Term> terms_;
};

using Poly = BasicPoly<BigInt>;
using RationalPoly = BasicPoly<Rational>;

RationalPoly to_rational(const Poly& p);
// Nullopt when some coefficient is not an integer.
std::optional<Poly> to_integral(const RationalPoly& p);

// A degree-one form sum(coeffs[i] * x_{i+1}); typically a positive root.
struct LinearForm {
  std::vector<int> coeffs;

  LinearForm() = default;
  explicit LinearForm(std::vector<int> c) : coeffs(std::move(c)) {}
  explicit LinearForm(const IntVector& v) : coeffs(v.data(), v.data() + v.size()) {}

  int rank() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
  }
  Poly to_poly() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// Substitution x_i -> images[i-1], a linear form in the target variables.
class VariableMap {
 public:
  VariableMap(int source_rank, int target_rank);

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }

  // 1-based indices.
  void set(int source_var, LinearForm image);
  void set_scaled(int source_var, int target_var, int scale = 1);
  const std::optional<LinearForm>& image(int source_var) const;

  static VariableMap identity(int rank);
  // gamma_1 -> 2 beta_1, gamma_i -> beta_i: type C variables to type B.
  static VariableMap bar(int rank);

 private:
  int source_rank_;
  int target_rank_;
  std::vector<std::optional<LinearForm>> images_;
};

class UnmappedVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Poly substitute(const Poly& f, const VariableMap& map);

class NonExactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonIntegralQuotient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quotient over the rationals; throws NonExactDivision on nonzero remainder.
RationalPoly divide_by_linear_rational(const Poly& f, const LinearForm& divisor);

// f / L with integer coefficients, or NonExactDivision / NonIntegralQuotient.
Poly divide_exact_by_linear(const Poly& f, const LinearForm& divisor);

struct Divisibility {
  bool divisible = false;  // over the rationals
  bool integral = false;   // quotient has integer coefficients
};

Divisibility divisibility_test(const Poly& f, const LinearForm& divisor);

struct PolyProps {
  bool nonneg = true;
  int total_degree = -1;  // -1 for the zero polynomial
  bool homogeneous = true;
};

PolyProps poly_props(const Poly& f);

// Multiply every coefficient by 2^k.
Poly scale_pow2(const Poly& f, int k);

}  // namespace eqs
