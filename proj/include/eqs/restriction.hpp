#pragma once

#include "eqs/poly.hpp"
#include "eqs/weyl.hpp"

#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace eqs {

// r_k = (s_{i_1} ... s_{i_{k-1}})(alpha_{i_k}) for a word i_1 ... i_m. For a
// reduced word of v these enumerate Inv(v^{-1}).
std::vector<LinearForm> prefix_roots(const RootSystem& rs, const Word& word);

// Sum over reduced subwords J of `word` with product w of prod_{k in J} r_k.
// The states of the scan are partial products (group elements), so subwords
// with the same partial product are merged. With `bruhat_prune`, states not
// below w are dropped.
Poly billey_restriction(const WeylGroup& g, const Word& word, ElementId w, bool bruhat_prune = true);

// All restrictions at v at once: the unpruned scan over `word`, returning
// (w, xi_w|_v) for every w with a nonzero value, sorted by id.
std::vector<std::pair<ElementId, Poly>> restriction_column(const WeylGroup& g, const Word& word);

// Memoized xi_w|_v using the canonical reduced word of v. Thread safe.
class RestrictionTable {
 public:
  using Column = std::vector<std::pair<ElementId, Poly>>;

  explicit RestrictionTable(std::shared_ptr<const WeylGroup> group, std::size_t column_cap = 1u << 20);

  const WeylGroup& group() const { return *group_; }
  const std::shared_ptr<const WeylGroup>& group_ptr() const { return group_; }
  int rank() const { return group_->rank(); }

  Poly restrict(ElementId w, ElementId v) const;
  // Product of the prefix roots of v: xi_v|_v.
  Poly diagonal(ElementId v) const;
  const std::vector<LinearForm>& prefix_roots(ElementId v) const;
  std::shared_ptr<const Column> column(ElementId v) const;

  std::size_t cached_columns() const;

 private:
  std::shared_ptr<const WeylGroup> group_;
  std::size_t column_cap_;
  std::vector<std::vector<LinearForm>> prefix_roots_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<ElementId, std::shared_ptr<const Column>> columns_;
};

// Lookup in a column; zero when absent.
const Poly* find_in_column(const RestrictionTable::Column& column, ElementId w);

}  // namespace eqs
