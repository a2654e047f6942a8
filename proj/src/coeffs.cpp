#include "eqs/coeffs.hpp"

#include <algorithm>

namespace eqs {

const Poly* Expansion::find(ElementId z) const {
  const auto k = index_of(z);
  return k < 0 ? nullptr : &values[static_cast<std::size_t>(k)];
}

std::ptrdiff_t Expansion::index_of(ElementId z) const {
  auto it = std::lower_bound(support.begin(), support.end(), z);
  if (it == support.end() || *it != z) return -1;
  return it - support.begin();
}

CoeffSolver::CoeffSolver(std::shared_ptr<const RestrictionTable> table) : table_(std::move(table)) {}

Expansion CoeffSolver::solve(ElementId u, ElementId v) const {
  const WeylGroup& g = group();
  const int lu = g.length(u);
  const int lv = g.length(v);
  Expansion out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto z = static_cast<ElementId>(k);
    if (g.length(z) > lu + lv) break;
    if (g.leq(u, z) && g.leq(v, z)) out.support.push_back(z);
  }

  for (std::size_t k = 0; k < out.support.size(); ++k) {
    const ElementId z = out.support[k];
    const auto column = table_->column(z);
    const Poly* xu = find_in_column(*column, u);
    const Poly* xv = find_in_column(*column, v);
    Poly numer = (xu && xv) ? (*xu) * (*xv) : Poly(rank());
    for (std::size_t j = 0; j < k; ++j) {
      if (out.values[j].is_zero()) continue;
      if (const Poly* xz = find_in_column(*column, out.support[j])) numer -= out.values[j] * (*xz);
    }
    for (const LinearForm& r : table_->prefix_roots(z)) {
      if (numer.is_zero()) break;
      numer = divide_exact_by_linear(numer, r);
    }

    CoeffMeta meta;
    meta.solve_index = static_cast<int>(k);
    const PolyProps props = poly_props(numer);
    meta.positive = props.nonneg;
    meta.degree_ok = numer.is_zero() || (props.homogeneous && props.total_degree == lu + lv - g.length(z));
    out.values.push_back(std::move(numer));
    out.meta.push_back(meta);
  }
  return out;
}

std::shared_ptr<const Expansion> CoeffSolver::expansion(ElementId u, ElementId v) const {
  if (u > v) std::swap(u, v);
  const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto computed = std::make_shared<const Expansion>(solve(u, v));
  std::unique_lock lock(mutex_);
  auto [it, fresh] = cache_.try_emplace(key, std::move(computed));
  return it->second;
}

CoeffResult CoeffSolver::coeff(ElementId u, ElementId v, ElementId w) const {
  CoeffResult result{u, v, w, Poly(rank()), {}};
  const auto e = expansion(u, v);
  const auto k = e->index_of(w);
  if (k >= 0) {
    result.value = e->values[static_cast<std::size_t>(k)];
    result.meta = e->meta[static_cast<std::size_t>(k)];
  }
  return result;
}

Poly CoeffSolver::value(ElementId u, ElementId v, ElementId w) const {
  const auto e = expansion(u, v);
  const Poly* p = e->find(w);
  return p ? *p : Poly(rank());
}

Engine Engine::create(const TypeLabel& label, std::size_t bound) {
  Engine e;
  e.group = std::make_shared<const WeylGroup>(RootSystem(label), bound);
  e.table = std::make_shared<const RestrictionTable>(e.group);
  e.solver = std::make_shared<const CoeffSolver>(e.table);
  return e;
}

IdentityReport coeff_identity_check(const CoeffSolver& solver, ElementId v, ElementId w) {
  IdentityReport r;
  r.lhs = solver.value(v, w, v);
  r.rhs = solver.table().restrict(w, v);
  r.equal = r.lhs == r.rhs;
  return r;
}

IdentityReport defining_identity_check(const CoeffSolver& solver, ElementId u, ElementId v, ElementId x) {
  const RestrictionTable& table = solver.table();
  IdentityReport r;
  r.lhs = Poly(solver.rank());
  const auto e = solver.expansion(u, v);
  for (std::size_t k = 0; k < e->support.size(); ++k) {
    if (!e->values[k].is_zero()) r.lhs += e->values[k] * table.restrict(e->support[k], x);
  }
  r.rhs = table.restrict(u, x) * table.restrict(v, x);
  r.equal = r.lhs == r.rhs;
  return r;
}

bool nonvanishing_coeff(const CoeffSolver& solver, ElementId u, ElementId v, ElementId w) {
  return !solver.value(u, v, w).is_zero();
}

}  // namespace eqs
