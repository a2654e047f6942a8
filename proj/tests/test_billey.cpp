#include "eqs/poly_io.hpp"
#include "eqs/restriction_checks.hpp"
#include "eqs/signed_permutation.hpp"
#include "eqs/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace eqs;

namespace {

const Engine& engine(const char* label) { return shared_engine(TypeLabel::parse(label)); }

// DP column against the 2^m subword enumerator for the canonical word of v.
void check_column_against_oracle(const Engine& e, ElementId v) {
  const WeylGroup& g = *e.group;
  const auto naive = oracle::naive_column(g.root_system().cartan(), g.reduced_word(v));
  const auto column = e.table->column(v);
  CHECK(column->size() == naive.size());
  for (const auto& [w, value] : *column) {
    const auto it = naive.find(oracle::key(g.element(w).matrix));
    REQUIRE(it != naive.end());
    CHECK(value == it->second);
  }
}

}  // namespace

TEST_SUITE("billey") {

TEST_CASE("restriction examples") {
  const Engine& b3 = engine("B3");
  const WeylGroup& g = *b3.group;
  for (ElementId v = 0; v < g.size(); ++v) CHECK(b3.table->restrict(g.identity(), v) == Poly::one(3));

  const ElementId x = g.from_word({2, 1, 2, 3});
  CHECK(b3.table->restrict(x, x) ==
        parse_poly("4*b1^3*b2 + 10*b1^2*b2^2 + 2*b1^2*b2*b3 + 8*b1*b2^3 + 3*b1*b2^2*b3 + 2*b2^4 + b2^3*b3", 3));
  CHECK(b3.table->restrict(g.from_word({3}), g.from_word({1, 2})).is_zero());

  const Engine& b2 = engine("B2");
  const ElementId v = b2.group->from_word({1, 2, 1});
  CHECK(b2.table->diagonal(v) == parse_poly("b1", 2) * parse_poly("2*b1 + b2", 2) * parse_poly("b1 + b2", 2));
  CHECK(b2.table->diagonal(b2.group->from_word({1})) == parse_poly("b1", 2));
}

TEST_CASE("the diagonal is the full-subword term") {
  const Engine& b3 = engine("B3");
  const WeylGroup& g = *b3.group;
  for (ElementId v = 0; v < g.size(); ++v) {
    const Poly d = restrict_diag(*b3.table, v);
    CHECK(d == b3.table->restrict(v, v));
    CHECK_FALSE(d.is_zero());
    CHECK(poly_props(d).total_degree == (g.length(v) == 0 ? 0 : g.length(v)));
  }
}

TEST_CASE("nonvanishing agrees with the Bruhat order") {
  const Engine& b3 = engine("B3");
  const WeylGroup& g = *b3.group;
  std::size_t pairs = 0;
  for (ElementId w = 0; w < g.size(); ++w)
    for (ElementId v = 0; v < g.size(); ++v) {
      const bool nonzero = !b3.table->restrict(w, v).is_zero();
      CHECK(nonvanishing_restriction(g, w, v) == nonzero);
      CHECK(nonzero == oracle::subword_leq(g.root_system().cartan(), g.element(w).matrix, g.element(v).matrix));
      ++pairs;
    }
  CHECK(pairs == 48 * 48);
}

TEST_CASE("DP matches the naive subword sum") {
  const Engine& b3 = engine("B3");
  for (ElementId v = 0; v < b3.group->size(); ++v) check_column_against_oracle(b3, v);
  const Engine& g2 = engine("G2");
  for (ElementId v = 0; v < g2.group->size(); ++v) check_column_against_oracle(g2, v);

  // The pruned single-target scan agrees with the column.
  const WeylGroup& g = *b3.group;
  for (ElementId v = 0; v < g.size(); v += 3)
    for (ElementId w = 0; w < g.size(); w += 2) {
      CHECK(billey_restriction(g, g.reduced_word(v), w, true) == b3.table->restrict(w, v));
      CHECK(billey_restriction(g, g.reduced_word(v), w, false) == b3.table->restrict(w, v));
    }
}

TEST_CASE("prefix roots are distinct positive roots") {
  const Engine& f4 = engine("F4");
  const WeylGroup& g = *f4.group;
  const RootSystem& rs = g.root_system();
  for (ElementId v = 0; v < g.size(); ++v) {
    if (g.length(v) > 8) break;
    const auto& roots = f4.table->prefix_roots(v);
    CHECK(static_cast<int>(roots.size()) == g.length(v));
    std::set<std::vector<int>> seen;
    for (const auto& r : roots) {
      Root x(4);
      for (int k = 0; k < 4; ++k) x(k) = r.coeffs[static_cast<std::size_t>(k)];
      CHECK(rs.positive_root_index(x).has_value());
      CHECK(seen.insert(r.coeffs).second);
    }
  }
  CHECK(prefix_roots(rs, {1, 1}).size() == 2);
}

TEST_CASE("reduced-word independence in B3") {
  const Engine& b3 = engine("B3");
  const WeylGroup& g = *b3.group;
  for (ElementId v = 0; v < g.size(); ++v) {
    const auto words = reduced_words(g, v);
    for (const auto& word : words) {
      CHECK(g.from_word(word) == v);
      for (const auto& [w, value] : restriction_column(g, word)) CHECK(b3.table->restrict(w, v) == value);
    }
  }
  CHECK(reduced_words(g, g.longest()).size() == 42);
}

TEST_CASE("monotonicity") {
  const Engine& b2 = engine("B2");
  const WeylGroup& g = *b2.group;
  std::size_t covers = 0;
  for (ElementId w = 0; w < g.size(); ++w)
    for (ElementId v = 0; v < g.size(); ++v)
      for (ElementId v2 = 0; v2 < g.size(); ++v2) {
        if (!g.leq(w, v) || !g.leq(v, v2)) continue;
        const MonotonicityReport r = check_monotonicity(*b2.solver, w, v, v2);
        CHECK(r.ok());
        if (v == v2) CHECK(r.difference.is_zero());
        if (w == g.identity()) CHECK(r.difference.is_zero());
        if (r.cover) {
          ++covers;
          CHECK(r.exchange_index >= 1);
          CHECK(r.identity_holds);
        }
      }
  CHECK(covers > 0);
  CHECK_THROWS_AS(check_monotonicity(*b2.solver, g.longest(), g.identity(), g.longest()), std::invalid_argument);

  const Engine& a5 = engine("A5");
  const WeylGroup& ga = *a5.group;
  const ElementId w = id_from_one_line(ga, parse_one_line("214356"));
  const MonotonicityReport m =
      check_monotonicity(*a5.solver, w, id_from_one_line(ga, parse_one_line("351624")),
                         id_from_one_line(ga, parse_one_line("631524")));
  CHECK(m.nonneg);
}

TEST_CASE("Arabia divisibility") {
  const Engine& a2 = engine("A2");
  const WeylGroup& g = *a2.group;
  std::size_t cases = 0;
  for (ElementId w = 0; w < g.size(); ++w)
    for (ElementId v = 0; v < g.size(); ++v)
      for (const auto& alpha : g.root_system().positive_roots()) {
        const ArabiaReport r = check_arabia(*a2.table, w, v, alpha);
        CHECK(r.divisible);
        CHECK(r.reflected != v);
        if (w == g.identity()) CHECK(r.difference.is_zero());
        ++cases;
      }
  CHECK(cases == 6 * 6 * 3);

  const Engine& b3 = engine("B3");
  const WeylGroup& gb = *b3.group;
  const auto& roots = gb.root_system().positive_roots();
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(gb.size() - 1));
  std::uniform_int_distribution<std::size_t> root(0, roots.size() - 1);
  for (int k = 0; k < 200; ++k) CHECK(check_arabia(*b3.table, pick(rng), pick(rng), roots[root(rng)]).divisible);

  // Divisibility holds for non-simple roots too.
  const Engine& a3 = engine("A3");
  const WeylGroup& g3 = *a3.group;
  Root alpha(3);
  alpha << 1, 1, 1;
  for (ElementId w = 0; w < g3.size(); ++w)
    for (ElementId v = 0; v < g3.size(); ++v) CHECK(check_arabia(*a3.table, w, v, alpha).divisible);
}

TEST_CASE("square-free summands") {
  const Engine& b3 = engine("B3");
  const WeylGroup& g = *b3.group;
  const ElementId x = g.from_word({2, 1, 2, 3});
  const SquarefreeReport diag = squarefree_summand_audit(*b3.table, x, x);
  CHECK(diag.summands == 1);
  CHECK(diag.all_squarefree);
  for (ElementId w = 0; w < g.size(); ++w) {
    if (!g.leq(w, x)) continue;
    const SquarefreeReport r = squarefree_summand_audit(*b3.table, w, x);
    CHECK(r.all_squarefree);
    CHECK(r.sum_matches);
  }
  const Engine& g2 = engine("G2");
  for (ElementId w = 0; w < g2.group->size(); ++w)
    for (ElementId v = 0; v < g2.group->size(); ++v) {
      const SquarefreeReport r = squarefree_summand_audit(*g2.table, w, v);
      CHECK(r.all_squarefree);
      CHECK(r.sum_matches);
      CHECK((r.summands == 0) == !g2.group->leq(w, v));
    }
}

TEST_CASE("transport of restrictions") {
  const Engine& b3 = engine("B3");
  const Engine& f4 = engine("F4");
  const DynkinInclusion inc(TypeLabel(Family::B, 3), TypeLabel(Family::F, 4), {2, 3, 4});
  const WeylGroup& g = *b3.group;
  const TransportReport id = transport_restriction_check(inc, *b3.table, *f4.table, g.identity(), g.identity());
  CHECK(id.ok());
  CHECK(id.identity.lhs == Poly::one(4));

  const TransportReport r =
      transport_restriction_check(inc, *b3.table, *f4.table, g.from_word({1, 2, 1}), g.from_word({1, 2, 3, 1}));
  CHECK(r.ok());
  CHECK(r.identity.rhs ==
        f4.table->restrict(f4.group->from_word({2, 3, 2}), f4.group->from_word({2, 3, 4, 2})));
  CHECK(r.vanishing_checked > 0);

  const Engine& b2 = engine("B2");
  const DynkinInclusion small(TypeLabel(Family::B, 2), TypeLabel(Family::B, 3), {1, 2});
  std::size_t pairs = 0;
  for (ElementId w = 0; w < b2.group->size(); ++w)
    for (ElementId v = 0; v < b2.group->size(); ++v) {
      CHECK(transport_restriction_check(small, *b2.table, *b3.table, w, v).ok());
      ++pairs;
    }
  CHECK(pairs == 64);
}

}  // TEST_SUITE
