#include "eqs/restriction_checks.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqs {

bool nonvanishing_restriction(const WeylGroup& g, ElementId w, ElementId v) { return g.leq(w, v); }

Poly restrict_diag(const RestrictionTable& table, ElementId v) { return table.diagonal(v); }

MonotonicityReport check_monotonicity(const CoeffSolver& solver, ElementId w, ElementId v, ElementId v2) {
  const WeylGroup& g = solver.group();
  if (!g.leq(w, v) || !g.leq(v, v2)) throw std::invalid_argument("monotonicity needs w <= v <= v'");
  const RestrictionTable& table = solver.table();

  MonotonicityReport r;
  r.difference = table.restrict(w, v2) - table.restrict(w, v);
  r.nonneg = poly_props(r.difference).nonneg;
  r.cover = g.length(v2) == g.length(v) + 1;
  if (!r.cover) return r;

  const Word& word = g.reduced_word(v2);
  int hits = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    Word shorter = word;
    shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(k));
    if (g.from_word(shorter) == v) {
      ++hits;
      r.exchange_index = static_cast<int>(k) + 1;
    }
  }
  r.coefficient = solver.value(w, v, v2);
  r.identity_holds =
      hits == 1 &&
      r.difference == table.prefix_roots(v2)[static_cast<std::size_t>(r.exchange_index - 1)].to_poly() * r.coefficient;
  return r;
}

ArabiaReport check_arabia(const RestrictionTable& table, ElementId w, ElementId v, const Root& alpha) {
  const WeylGroup& g = table.group();
  ArabiaReport r;
  const IntMatrix s = reflection_in_root(g.root_system(), alpha);
  r.reflected = g.id_of_matrix(s * g.element(v).matrix);
  r.difference = table.restrict(w, r.reflected) - table.restrict(w, v);
  const Divisibility d = divisibility_test(r.difference, LinearForm(alpha));
  r.divisible = d.divisible;
  r.integral = d.integral;
  return r;
}

namespace {

struct SubwordWalk {
  const WeylGroup& g;
  const Word& word;
  const std::vector<LinearForm>& roots;
  ElementId target;
  SquarefreeReport& report;
  Poly& total;
  std::vector<std::size_t> chosen;

  void run(std::size_t k, ElementId current) {
    if (g.length(current) > g.length(target) || !g.leq(current, target)) return;
    if (k == word.size()) {
      if (current != target) return;
      ++report.summands;
      Poly term = Poly::one(g.rank());
      std::vector<std::vector<int>> used;
      for (std::size_t j : chosen) {
        term *= roots[j].to_poly();
        used.push_back(roots[j].coeffs);
      }
      std::sort(used.begin(), used.end());
      if (std::adjacent_find(used.begin(), used.end()) != used.end()) report.all_squarefree = false;
      total += term;
      return;
    }
    run(k + 1, current);
    const ElementId taken = g.right(current, word[k]);
    if (g.length(taken) > g.length(current)) {
      chosen.push_back(k);
      run(k + 1, taken);
      chosen.pop_back();
    }
  }
};

}  // namespace

SquarefreeReport squarefree_summand_audit(const RestrictionTable& table, ElementId w, ElementId v) {
  const WeylGroup& g = table.group();
  SquarefreeReport report;
  Poly total(g.rank());
  SubwordWalk walk{g, g.reduced_word(v), table.prefix_roots(v), w, report, total, {}};
  walk.run(0, g.identity());
  report.sum_matches = total == table.restrict(w, v);
  return report;
}

TransportReport transport_restriction_check(const DynkinInclusion& inc, const RestrictionTable& source,
                                            const RestrictionTable& target, ElementId w, ElementId v,
                                            bool check_vanishing) {
  const WeylGroup& gs = source.group();
  const WeylGroup& gt = target.group();
  const ElementId tw = transport_element(inc, gs, gt, w);
  const ElementId tv = transport_element(inc, gs, gt, v);

  TransportReport r;
  r.identity.lhs = substitute(source.restrict(w, v), inc.substitution());
  r.identity.rhs = target.restrict(tw, tv);
  r.identity.equal = r.identity.lhs == r.identity.rhs;
  if (!check_vanishing) return r;

  // The column at v° lists every nonzero restriction there, so one pass covers
  // every element outside the parabolic.
  const auto column = target.column(tv);
  for (std::size_t x = 0; x < gt.size(); ++x) {
    if (gt.in_parabolic(static_cast<ElementId>(x), inc.node_map())) continue;
    ++r.vanishing_checked;
    if (find_in_column(*column, static_cast<ElementId>(x))) ++r.vanishing_failures;
  }
  return r;
}

}  // namespace eqs
