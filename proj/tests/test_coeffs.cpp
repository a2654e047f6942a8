#include "eqs/correspondence.hpp"
#include "eqs/poly_io.hpp"
#include "eqs/verify.hpp"

#include <doctest.h>

using namespace eqs;

namespace {

const Engine& engine(const char* label) { return shared_engine(TypeLabel::parse(label)); }

StrictPartition part(const char* s) { return StrictPartition::parse(s); }

}  // namespace

TEST_SUITE("coeffs") {

TEST_CASE("unit and support") {
  const Engine& b3 = engine("B3");
  const WeylGroup& g = *b3.group;
  for (ElementId v = 0; v < g.size(); v += 5)
    for (ElementId w = 0; w < g.size(); ++w) {
      const Poly c = b3.solver->value(g.identity(), v, w);
      CHECK(c == (v == w ? Poly::one(3) : Poly(3)));
    }
  const ElementId u = g.from_word({2, 3});
  const ElementId v = g.from_word({1, 3});
  const Expansion e = b3.solver->solve(u, v);
  for (std::size_t k = 0; k < e.support.size(); ++k) {
    const ElementId z = e.support[k];
    CHECK(g.leq(u, z));
    CHECK(g.leq(v, z));
    CHECK(g.length(z) <= g.length(u) + g.length(v));
    if (k > 0) CHECK(e.support[k - 1] < z);
    CHECK(e.index_of(z) == static_cast<std::ptrdiff_t>(k));
  }
  CHECK(e.find(g.identity()) == nullptr);
  CHECK(b3.solver->coeff(u, v, g.identity()).meta.solve_index == -1);
}

TEST_CASE("B/C example coefficients") {
  const Engine& b3 = engine("B3");
  const Engine& c3 = engine("C3");
  const auto u = parse_one_line("3 -2 1");
  const auto v = parse_one_line("-3 -2 1");
  const auto w = parse_one_line("-2 -3 1");
  const WeylGroup& gb = *b3.group;
  const WeylGroup& gc = *c3.group;
  const CoeffResult x = b3.solver->coeff(id_from_one_line(gb, u), id_from_one_line(gb, v), id_from_one_line(gb, w));
  CHECK(x.value == parse_poly("2*b1*b2^2 + 2*b1*b2*b3 + 2*b2^3 + 3*b2^2*b3 + b2*b3^2", 3));
  CHECK(x.meta.positive);
  CHECK(x.meta.degree_ok);
  const Poly y = c3.solver->value(id_from_one_line(gc, u), id_from_one_line(gc, v), id_from_one_line(gc, w));
  CHECK(y == parse_poly("2*c1*c2^2 + 2*c1*c2*c3 + 4*c2^3 + 6*c2^2*c3 + 2*c2*c3^2", 3));

  const BcReport r = bc_correspondence(b3, c3, u, v, w);
  CHECK(r.identity.exponent == -1);
  CHECK(r.ok());
  CHECK_FALSE(r.degree_matching);

  const auto e = parse_one_line("1 2 3");
  const BcReport t = bc_correspondence(b3, c3, e, e, e);
  CHECK(t.ok());
  CHECK(t.identity.exponent == 0);
  CHECK(t.type_b == Poly::one(3));
}

TEST_CASE("B/C correspondence, all rank-2 triples") {
  const Engine& b2 = engine("B2");
  const Engine& c2 = engine("C2");
  std::size_t triples = 0, matching = 0;
  for (ElementId u = 0; u < b2.group->size(); ++u)
    for (ElementId v = 0; v < b2.group->size(); ++v)
      for (ElementId w = 0; w < b2.group->size(); ++w) {
        const BcReport r = bc_correspondence(b2, c2, one_line_of(*b2.group, u), one_line_of(*b2.group, v),
                                             one_line_of(*b2.group, w));
        CHECK(r.ok());
        ++triples;
        if (r.degree_matching) {
          ++matching;
          CHECK(r.type_b.is_constant());
          CHECK(r.type_c.is_constant());
        }
      }
  CHECK(triples == 512);
  CHECK(matching > 0);
}

TEST_CASE("coefficient identity C_{v,w}^v = xi_w|_v") {
  for (const char* label : {"B2", "A3"}) {
    CAPTURE(label);
    const Engine& e = engine(label);
    const WeylGroup& g = *e.group;
    for (ElementId v = 0; v < g.size(); ++v)
      for (ElementId w = 0; w < g.size(); ++w) {
        const IdentityReport r = coeff_identity_check(*e.solver, v, w);
        CHECK(r.equal);
        if (w == g.identity()) CHECK(r.lhs == Poly::one(g.rank()));
        if (!g.leq(w, v)) CHECK(r.lhs.is_zero());
      }
  }
  const Engine& b2 = engine("B2");
  const ElementId v = b2.group->from_word({1, 2, 1});
  CHECK(b2.solver->value(v, v, v) == parse_poly("b1", 2) * parse_poly("2*b1 + b2", 2) * parse_poly("b1 + b2", 2));
}

TEST_CASE("strict partitions and w_lambda") {
  CHECK(w_lambda(3, part("")) == parse_one_line("1 2 3"));
  CHECK(w_lambda(3, part("3,2")) == parse_one_line("-3 -2 1"));
  CHECK(w_lambda(3, part("2,1")) == parse_one_line("-2 -1 3"));
  CHECK(w_lambda(3, part("3 2 1")) == parse_one_line("-3 -2 -1"));
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : strict_partitions(n)) CHECK(sign_count(w_lambda(n, lam)) == lam.length());
  CHECK(strict_partitions(2).size() == 4);
  CHECK(strict_partitions(3).size() == 8);
  CHECK(strict_partitions(3).front() == part(""));
  CHECK(part("3,2").to_string() == "(3,2)");
  CHECK(part("").to_string() == "()");
  CHECK_THROWS_AS(part("2,2").validate(3), std::invalid_argument);
  CHECK_THROWS_AS(part("4").validate(3), std::invalid_argument);
  CHECK_THROWS_AS(w_lambda(2, part("3")), std::invalid_argument);
  CHECK(parse_grassmannian("og") == Grassmannian::OG);
  CHECK(parse_grassmannian("LG") == Grassmannian::LG);
  CHECK_THROWS(parse_grassmannian("Gr"));
}

TEST_CASE("Grassmannian coefficients") {
  const Engine& b3 = engine("B3");
  const Engine& c3 = engine("C3");
  CHECK(grassmann_coeff(b3, part(""), part(""), part("")).value == Poly::one(3));
  CHECK(grassmann_coeff(b3, part("3,2"), part("2,1"), part("3,2,1")).value ==
        parse_poly("6*b1^2 + 10*b1*b2 + 4*b2^2 + 5*b1*b3 + 4*b2*b3 + b3^2", 3));
  CHECK(grassmann_coeff(c3, part("3,2"), part("2,1"), part("3,2,1")).value ==
        parse_poly("3*c1^2 + 10*c1*c2 + 8*c2^2 + 5*c1*c3 + 8*c2*c3 + 2*c3^2", 3));
  CHECK_THROWS_AS(grassmann_coeff(engine("A3"), part(""), part(""), part("")), std::invalid_argument);

  const BcReport r = oglg_correspondence(b3, c3, part("3,2"), part("2,1"), part("3,2,1"));
  CHECK(r.identity.exponent == -1);
  CHECK(r.ok());
  CHECK(oglg_correspondence(b3, c3, part(""), part(""), part("")).ok());

  const Engine& b2 = engine("B2");
  const Engine& c2 = engine("C2");
  std::size_t triples = 0;
  for (const auto& l : strict_partitions(2))
    for (const auto& m : strict_partitions(2))
      for (const auto& n : strict_partitions(2)) {
        CHECK(oglg_correspondence(b2, c2, l, m, n).ok());
        ++triples;
      }
  CHECK(triples == 64);
}

TEST_CASE("transport of coefficients") {
  const Engine& b3 = engine("B3");
  const Engine& f4 = engine("F4");
  const DynkinInclusion inc(TypeLabel(Family::B, 3), TypeLabel(Family::F, 4), {2, 3, 4});
  const WeylGroup& g = *b3.group;
  const ElementId u = g.from_word({1, 2, 1});
  const ElementId v = g.from_word({2, 3, 1});
  const ElementId w = g.from_word({1, 2, 3, 1});
  CHECK(b3.solver->value(u, v, w) == parse_poly("2*b1^2 + 3*b1*b2 + b2^2", 3));
  const IdentityReport r = transport_coeff_check(inc, b3, f4, u, v, w);
  CHECK(r.equal);
  CHECK(r.rhs == parse_poly("2*z2^2 + 3*z2*z3 + z3^2", 4));
  const WeylGroup& gf = *f4.group;
  CHECK(r.rhs == f4.solver->value(gf.from_word({2, 3, 2}), gf.from_word({3, 4, 2}), gf.from_word({2, 3, 4, 2})));
  CHECK(transport_coeff_check(inc, b3, f4, g.identity(), g.identity(), g.identity()).equal);

  const Engine& b2 = engine("B2");
  const DynkinInclusion small(TypeLabel(Family::B, 2), TypeLabel(Family::B, 3), {1, 2});
  std::size_t triples = 0;
  for (ElementId a = 0; a < b2.group->size(); ++a)
    for (ElementId b = 0; b < b2.group->size(); ++b)
      for (ElementId c = 0; c < b2.group->size(); ++c) {
        CHECK(transport_coeff_check(small, b2, b3, a, b, c).equal);
        ++triples;
      }
  CHECK(triples == 512);
}

TEST_CASE("nonvanishing examples") {
  const Engine& b3 = engine("B3");
  const WeylGroup& g = *b3.group;
  const ElementId u = g.from_word({2, 3});
  const ElementId w = g.from_word({2, 1, 3});
  CHECK(b3.solver->value(u, g.from_word({1, 3}), w) == parse_poly("b2 + b3", 3));
  CHECK_FALSE(nonvanishing_coeff(*b3.solver, u, g.from_word({1, 1, 3}), w));
  CHECK(nonvanishing_coeff(*b3.solver, u, g.from_word({3, 1, 3}), w));
  CHECK(b3.solver->value(u, g.from_word({3, 1, 3}), w) == Poly::one(3));
  CHECK(nonvanishing_coeff(*b3.solver, g.identity(), w, w));
}

TEST_CASE("defining identity, commutativity and positivity") {
  for (const char* label : {"B2", "A3"}) {
    CAPTURE(label);
    const Engine& e = engine(label);
    const WeylGroup& g = *e.group;
    for (ElementId u = 0; u < g.size(); ++u)
      for (ElementId v = 0; v < g.size(); ++v) {
        for (ElementId x = 0; x < g.size(); ++x) CHECK(defining_identity_check(*e.solver, u, v, x).equal);
        const Expansion a = e.solver->solve(u, v);
        const Expansion b = e.solver->solve(v, u);
        CHECK(a.support == b.support);
        CHECK(a.values == b.values);
        for (std::size_t k = 0; k < a.support.size(); ++k) {
          CHECK(a.meta[k].positive);
          CHECK(a.meta[k].degree_ok);
          const ElementId z = a.support[k];
          if (g.length(z) == g.length(u) + g.length(v)) CHECK(a.values[k].is_constant());
          if (!a.values[k].is_zero())
            CHECK(poly_props(a.values[k]).total_degree == g.length(u) + g.length(v) - g.length(z));
        }
      }
  }
}

TEST_CASE("restriction power-of-two identity in rank 3") {
  const Engine& b3 = engine("B3");
  const Engine& c3 = engine("C3");
  const WeylGroup& g = *b3.group;
  for (ElementId w = 0; w < g.size(); ++w) {
    const SignedPermutation pw = one_line_of(g, w);
    const ElementId wc = id_from_one_line(*c3.group, pw);
    for (ElementId x = 0; x < g.size(); ++x) {
      const ElementId xc = id_from_one_line(*c3.group, one_line_of(g, x));
      const Poly lhs = substitute(c3.table->restrict(wc, xc), VariableMap::bar(3));
      CHECK(lhs == scale_pow2(b3.table->restrict(w, x), sign_count(pw)));
    }
  }
}

}  // TEST_SUITE
