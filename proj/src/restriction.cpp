#include "eqs/restriction.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace eqs {

std::vector<LinearForm> prefix_roots(const RootSystem& rs, const Word& word) {
  std::vector<LinearForm> out;
  out.reserve(word.size());
  IntMatrix prefix = IntMatrix::Identity(rs.rank(), rs.rank());
  for (int i : word) {
    out.emplace_back(IntVector(prefix.col(i - 1)));
    prefix = prefix * rs.simple_reflection(i);
  }
  return out;
}

namespace {

using States = std::map<ElementId, Poly>;

States scan(const WeylGroup& g, const Word& word, int max_length, const ElementId* prune_below) {
  const auto roots = prefix_roots(g.root_system(), word);
  States states;
  states.emplace(g.identity(), Poly::one(g.rank()));
  for (std::size_t k = 0; k < word.size(); ++k) {
    const Poly root = roots[k].to_poly();
    States next = states;
    for (const auto& [u, value] : states) {
      const ElementId taken = g.right(u, word[k]);
      if (g.length(taken) <= g.length(u) || g.length(taken) > max_length) continue;
      if (prune_below && !g.leq(taken, *prune_below)) continue;
      auto [it, fresh] = next.try_emplace(taken, g.rank());
      it->second += value * root;
    }
    states = std::move(next);
  }
  return states;
}

}  // namespace

Poly billey_restriction(const WeylGroup& g, const Word& word, ElementId w, bool bruhat_prune) {
  States states = scan(g, word, g.length(w), bruhat_prune ? &w : nullptr);
  auto it = states.find(w);
  return it == states.end() ? Poly(g.rank()) : std::move(it->second);
}

std::vector<std::pair<ElementId, Poly>> restriction_column(const WeylGroup& g, const Word& word) {
  States states = scan(g, word, static_cast<int>(word.size()), nullptr);
  std::vector<std::pair<ElementId, Poly>> out;
  out.reserve(states.size());
  for (auto& [w, value] : states) {
    if (!value.is_zero()) out.emplace_back(w, std::move(value));
  }
  return out;
}

RestrictionTable::RestrictionTable(std::shared_ptr<const WeylGroup> group, std::size_t column_cap)
    : group_(std::move(group)), column_cap_(column_cap) {
  prefix_roots_.reserve(group_->size());
  for (std::size_t v = 0; v < group_->size(); ++v) {
    prefix_roots_.push_back(eqs::prefix_roots(group_->root_system(), group_->reduced_word(static_cast<ElementId>(v))));
  }
}

const std::vector<LinearForm>& RestrictionTable::prefix_roots(ElementId v) const { return prefix_roots_.at(v); }

std::shared_ptr<const RestrictionTable::Column> RestrictionTable::column(ElementId v) const {
  {
    std::shared_lock lock(mutex_);
    auto it = columns_.find(v);
    if (it != columns_.end()) return it->second;
  }
  auto computed = std::make_shared<const Column>(restriction_column(*group_, group_->reduced_word(v)));
  std::unique_lock lock(mutex_);
  if (columns_.size() >= column_cap_) return computed;
  auto [it, fresh] = columns_.try_emplace(v, std::move(computed));
  return it->second;
}

const Poly* find_in_column(const RestrictionTable::Column& column, ElementId w) {
  auto it = std::lower_bound(column.begin(), column.end(), w,
                             [](const auto& entry, ElementId key) { return entry.first < key; });
  return it != column.end() && it->first == w ? &it->second : nullptr;
}

Poly RestrictionTable::restrict(ElementId w, ElementId v) const {
  if (group_->length(w) > group_->length(v)) return Poly(rank());
  const auto col = column(v);
  const Poly* p = find_in_column(*col, w);
  return p ? *p : Poly(rank());
}

Poly RestrictionTable::diagonal(ElementId v) const {
  Poly out = Poly::one(rank());
  for (const auto& r : prefix_roots(v)) out *= r.to_poly();
  return out;
}

std::size_t RestrictionTable::cached_columns() const {
  std::shared_lock lock(mutex_);
  return columns_.size();
}

}  // namespace eqs
