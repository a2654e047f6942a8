#include "eqs/poly_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace eqs {

std::string format_poly(const Poly& f, char glyph) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    bool wrote = false;
    if (magnitude != 1 || m.degree() == 0) {
      out << magnitude.get_str();
      wrote = true;
    }
    for (int v = 0; v < f.rank(); ++v) {
      const int e = m.exponent(v);
      if (e == 0) continue;
      if (wrote) out << '*';
      out << glyph << (v + 1);
      if (e != 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
    }
  }

  struct RawTerm {
    BigInt coeff;
    std::vector<std::pair<int, int>> factors;  // (variable, exponent)
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    if (text_.empty()) throw std::invalid_argument("empty polynomial text");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    terms.push_back(term(negative));
    while (pos_ < text_.size()) {
      const char sign = get();
      if (sign != '+' && sign != '-') fail("expected '+' or '-'");
      negative = sign == '-';
      if (peek() == '-') {
        get();
        negative = !negative;
      }
      terms.push_back(term(negative));
    }
    return terms;
  }

 private:
  RawTerm term(bool negative) {
    RawTerm t;
    t.coeff = 1;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = BigInt(digits());
      have_factor = true;
      if (peek() == '*') get();
      else return finish(t, negative);
    }
    while (true) {
      if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        if (!have_factor) fail("expected a term");
        fail("expected a variable after '*'");
      }
      get();
      const int var = std::stoi(digits());
      int exp = 1;
      if (peek() == '^') {
        get();
        exp = std::stoi(digits());
      }
      if (var < 1) fail("variable index must be positive");
      t.factors.emplace_back(var, exp);
      have_factor = true;
      if (peek() != '*') break;
      get();
    }
    return finish(t, negative);
  }

  RawTerm finish(RawTerm& t, bool negative) {
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
    if (out.empty()) fail("expected digits");
    return out;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, int rank) {
  if (text == "0") return Poly(rank);
  const auto raw = PolyParser(text).parse();
  int inferred = 0;
  for (const auto& t : raw) {
    for (const auto& [v, e] : t.factors) inferred = std::max(inferred, v);
  }
  if (rank == 0) rank = inferred;
  if (inferred > rank) throw RankMismatch("polynomial text uses a variable beyond the rank");
  std::vector<Poly::Term> terms;
  for (const auto& t : raw) {
    std::vector<int> exps(static_cast<std::size_t>(rank), 0);
    for (const auto& [v, e] : t.factors) exps[static_cast<std::size_t>(v - 1)] += e;
    terms.emplace_back(Monomial::from_exponents(exps), t.coeff);
  }
  return Poly::from_terms(rank, std::move(terms));
}

nlohmann::json poly_to_json(const Poly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"exp", m.exponents(f.rank())}, {"coef", c.get_str()}});
  }
  return {{"rank", f.rank()}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const nlohmann::json& j) {
  const int rank = j.at("rank").get<int>();
  std::vector<Poly::Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto exps = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != rank) throw RankMismatch("exponent vector length differs from rank");
    terms.emplace_back(Monomial::from_exponents(exps), BigInt(t.at("coef").get<std::string>()));
  }
  return Poly::from_terms(rank, std::move(terms));
}

}  // namespace eqs
