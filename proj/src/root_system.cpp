#include "eqs/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqs {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

char display_glyph(Family f) {
  switch (f) {
    case Family::A: return 'a';
    case Family::B: return 'b';
    case Family::C: return 'c';
    case Family::D: return 'd';
    case Family::F: return 'z';
    case Family::G: return 'g';
  }
  return 'x';
}

TypeLabel::TypeLabel(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = rank >= 1 && rank <= kMaxVariables;
  switch (family) {
    case Family::D: ok = ok && rank >= 3; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    default: break;
  }
  if (!ok) {
    throw std::invalid_argument(std::string("invalid rank ") + std::to_string(rank) + " for type " +
                                family_letter(family));
  }
}

TypeLabel TypeLabel::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("type label too short: '" + std::string(text) + "'");
  Family family;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': family = Family::A; break;
    case 'B': family = Family::B; break;
    case 'C': family = Family::C; break;
    case 'D': family = Family::D; break;
    case 'F': family = Family::F; break;
    case 'G': family = Family::G; break;
    default: throw std::invalid_argument("unknown Lie type '" + std::string(text) + "'");
  }
  const std::string digits(text.substr(1));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }) ||
      digits.size() > 3) {
    throw std::invalid_argument("bad rank in type label '" + std::string(text) + "'");
  }
  return TypeLabel(family, std::stoi(digits));
}

std::string TypeLabel::to_string() const { return family_letter(family_) + std::to_string(rank_); }

IntMatrix cartan_matrix(const TypeLabel& label) {
  const int n = label.rank();
  IntMatrix a = 2 * IntMatrix::Identity(n, n);
  auto bond = [&](int i, int j, int aij, int aji) {
    a(i - 1, j - 1) = aij;
    a(j - 1, i - 1) = aji;
  };
  switch (label.family()) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case Family::B:
      // Node 1 is the short simple root.
      if (n >= 2) bond(1, 2, -2, -1);
      for (int i = 2; i < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case Family::C:
      // Node 1 is the long simple root.
      if (n >= 2) bond(1, 2, -1, -2);
      for (int i = 2; i < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case Family::D:
      // Fork nodes 1 and 2 both attach to node 3.
      bond(1, 3, -1, -1);
      bond(2, 3, -1, -1);
      for (int i = 3; i < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case Family::F:
      // Nodes 1, 2 short; 3, 4 long. Nodes 2, 3, 4 carry a copy of B3.
      bond(1, 2, -1, -1);
      bond(2, 3, -2, -1);
      bond(3, 4, -1, -1);
      break;
    case Family::G:
      // Node 1 short.
      bond(1, 2, -3, -1);
      break;
  }
  return a;
}

namespace {

std::vector<int> key_of(const Root& r) { return std::vector<int>(r.data(), r.data() + r.size()); }

std::size_t factorial(int n) {
  std::size_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::size_t>(i);
  return out;
}

}  // namespace

RootSystem::RootSystem(TypeLabel label) : label_(label), cartan_(cartan_matrix(label)) {
  const int n = rank();
  for (int i = 1; i <= n; ++i) {
    IntMatrix s = IntMatrix::Identity(n, n);
    for (int j = 1; j <= n; ++j) s(i - 1, j - 1) -= cartan_(i - 1, j - 1);
    simple_reflections_.push_back(std::move(s));
  }

  // Breadth-first closure of the simple roots under simple reflections.
  std::vector<Root> roots;
  std::vector<ReflectionExpr> exprs;
  std::map<std::vector<int>, std::size_t> seen;
  std::deque<std::size_t> queue;
  for (int i = 1; i <= n; ++i) {
    Root r = Root::Zero(n);
    r(i - 1) = 1;
    seen.emplace(key_of(r), roots.size());
    queue.push_back(roots.size());
    roots.push_back(r);
    exprs.push_back({{}, i});
  }
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      Root image = simple_reflections_[static_cast<std::size_t>(i - 1)] * roots[k];
      if ((image.array() < 0).any()) continue;
      if (seen.count(key_of(image))) continue;
      ReflectionExpr e = exprs[k];
      e.word.insert(e.word.begin(), i);
      seen.emplace(key_of(image), roots.size());
      queue.push_back(roots.size());
      roots.push_back(std::move(image));
      exprs.push_back(std::move(e));
    }
  }

  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const int hx = roots[x].sum();
    const int hy = roots[y].sum();
    if (hx != hy) return hx < hy;
    return key_of(roots[x]) > key_of(roots[y]);
  });
  for (std::size_t k : order) {
    index_.emplace(key_of(roots[k]), positive_roots_.size());
    positive_roots_.push_back(roots[k]);
    exprs_.push_back(exprs[k]);
  }
}

std::optional<std::size_t> RootSystem::positive_root_index(const Root& alpha) const {
  if (alpha.size() != rank()) return std::nullopt;
  auto it = index_.find(key_of(alpha));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Root& alpha) const {
  return positive_root_index(alpha).has_value() || positive_root_index(Root(-alpha)).has_value();
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("simple root index out of range");
  Root r = Root::Zero(rank());
  r(i - 1) = 1;
  return r;
}

const IntMatrix& RootSystem::simple_reflection(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("simple reflection index out of range");
  return simple_reflections_[static_cast<std::size_t>(i - 1)];
}

std::size_t RootSystem::group_order() const {
  const int n = rank();
  switch (label_.family()) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::size_t{1} << n) * factorial(n);
    case Family::D: return (std::size_t{1} << (n - 1)) * factorial(n);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

IntMatrix simple_reflection_matrix(const RootSystem& rs, int i) { return rs.simple_reflection(i); }

IntMatrix reflection_in_root(const RootSystem& rs, const Root& alpha) {
  const auto idx = rs.positive_root_index(alpha);
  if (!idx) throw std::invalid_argument("not a positive root of " + rs.label().to_string());
  const ReflectionExpr& e = rs.reflection_expr(*idx);
  const int n = rs.rank();
  IntMatrix w = IntMatrix::Identity(n, n);
  IntMatrix w_inv = IntMatrix::Identity(n, n);
  for (int i : e.word) w = w * rs.simple_reflection(i);
  for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) w_inv = w_inv * rs.simple_reflection(*it);
  return w * rs.simple_reflection(e.simple) * w_inv;
}

DynkinInclusion::DynkinInclusion(TypeLabel source, TypeLabel target, std::vector<int> node_map)
    : source_(source), target_(target), node_map_(std::move(node_map)) {
  if (!is_valid(source_, target_, node_map_)) {
    throw std::invalid_argument("node map is not a Dynkin diagram inclusion " + source_.to_string() + " -> " +
                                target_.to_string());
  }
}

bool DynkinInclusion::is_valid(const TypeLabel& source, const TypeLabel& target, const std::vector<int>& node_map) {
  const int n = source.rank();
  if (static_cast<int>(node_map.size()) != n) return false;
  std::set<int> used;
  for (int img : node_map) {
    if (img < 1 || img > target.rank() || !used.insert(img).second) return false;
  }
  const IntMatrix a = cartan_matrix(source);
  const IntMatrix b = cartan_matrix(target);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a(i, j) != b(node_map[static_cast<std::size_t>(i)] - 1, node_map[static_cast<std::size_t>(j)] - 1)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<int> DynkinInclusion::parse_node_map(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("node map entry needs 'i:j': '" + item + "'");
    try {
      pairs.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad node map entry '" + item + "'");
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].first != static_cast<int>(k) + 1) throw std::invalid_argument("node map must cover 1..n once");
    out.push_back(pairs[k].second);
  }
  return out;
}

VariableMap DynkinInclusion::substitution() const {
  VariableMap m(source_.rank(), target_.rank());
  for (int i = 1; i <= source_.rank(); ++i) m.set_scaled(i, image(i));
  return m;
}

VariableMap folding_substitution(const TypeLabel& source, const TypeLabel& target) {
  if (source.family() != Family::D || target.family() != Family::B || source.rank() != target.rank() + 1) {
    throw std::invalid_argument("folding needs D(n+1) -> B(n), got " + source.to_string() + " -> " +
                                target.to_string());
  }
  VariableMap m(source.rank(), target.rank());
  m.set_scaled(1, 1);
  m.set_scaled(2, 1);
  for (int k = 3; k <= source.rank(); ++k) m.set_scaled(k, k - 1);
  return m;
}

}  // namespace eqs
