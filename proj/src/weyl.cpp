#include "eqs/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqs {

Word parse_word(std::string_view text) {
  Word word;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::string digits = token;
    if (digits[0] == 's' || digits[0] == 'S') digits.erase(0, 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("bad letter '" + token + "' in word");
    }
    word.push_back(std::stoi(digits));
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  if (word.size() == 1 && word[0] == 0) word.clear();
  return word;
}

std::string format_word(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t k = 0; k < word.size(); ++k) out << (k ? " s" : "s") << word[k];
  return out.str();
}

std::size_t MatrixHash::operator()(const IntMatrix& m) const {
  std::size_t h = static_cast<std::size_t>(m.rows()) * 1315423911u;
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    h ^= static_cast<std::size_t>(m.data()[k] + 0x9e3779b9) + (h << 6) + (h >> 2);
  }
  return h;
}

bool element_less(const WeylElement& a, const WeylElement& b) {
  if (a.length != b.length) return a.length < b.length;
  return std::lexicographical_compare(a.matrix.data(), a.matrix.data() + a.matrix.size(), b.matrix.data(),
                                      b.matrix.data() + b.matrix.size());
}

int inversion_count(const RootSystem& rs, const IntMatrix& m) {
  int count = 0;
  for (const Root& alpha : rs.positive_roots()) {
    const Root image = m * alpha;
    for (Eigen::Index k = 0; k < image.size(); ++k) {
      if (image(k) != 0) {
        if (image(k) < 0) ++count;
        break;
      }
    }
  }
  return count;
}

WeylElement identity_element(const RootSystem& rs) {
  return {IntMatrix::Identity(rs.rank(), rs.rank()), 0};
}

WeylElement make_element(const RootSystem& rs, IntMatrix m) {
  const int len = inversion_count(rs, m);
  return {std::move(m), len};
}

WeylElement element_from_word(const RootSystem& rs, const Word& word) {
  IntMatrix m = IntMatrix::Identity(rs.rank(), rs.rank());
  for (int i : word) m = m * rs.simple_reflection(i);
  return make_element(rs, std::move(m));
}

WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  return make_element(rs, a.matrix * b.matrix);
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  Word word = reduced_word(rs, w);
  std::reverse(word.begin(), word.end());
  return element_from_word(rs, word);
}

namespace {

// Smallest i with l(s_i w) < l(w), or 0 for the identity.
int first_left_descent(const RootSystem& rs, const WeylElement& w) {
  for (int i = 1; i <= rs.rank(); ++i) {
    if (inversion_count(rs, rs.simple_reflection(i) * w.matrix) < w.length) return i;
  }
  return 0;
}

}  // namespace

Word reduced_word(const RootSystem& rs, const WeylElement& w) {
  Word word;
  WeylElement cur = w;
  while (cur.length > 0) {
    const int i = first_left_descent(rs, cur);
    word.push_back(i);
    cur = make_element(rs, rs.simple_reflection(i) * cur.matrix);
  }
  return word;
}

bool is_reduced_for(const RootSystem& rs, const Word& word, const WeylElement& w) {
  return static_cast<int>(word.size()) == w.length && element_from_word(rs, word) == w;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& w, const WeylElement& v) {
  WeylElement a = w;
  WeylElement b = v;
  while (b.length > 0) {
    if (a.length > b.length) return false;
    const int i = first_left_descent(rs, b);
    WeylElement sa = make_element(rs, rs.simple_reflection(i) * a.matrix);
    if (sa.length < a.length) a = std::move(sa);
    b = make_element(rs, rs.simple_reflection(i) * b.matrix);
  }
  return a.length == 0;
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::size_t bound) {
  if (rs.group_order() > bound) {
    throw EnumerationBoundExceeded("Weyl group of " + rs.label().to_string() + " has " +
                                   std::to_string(rs.group_order()) + " elements, above the bound " +
                                   std::to_string(bound));
  }
  std::vector<WeylElement> out;
  std::unordered_map<IntMatrix, std::size_t, MatrixHash> seen;
  out.push_back(identity_element(rs));
  seen.emplace(out.back().matrix, 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 1; i <= rs.rank(); ++i) {
      IntMatrix m = out[k].matrix * rs.simple_reflection(i);
      if (seen.count(m)) continue;
      seen.emplace(m, out.size());
      // Breadth-first distance in the Cayley graph is the length.
      out.push_back({std::move(m), out[k].length + 1});
    }
  }
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

std::vector<WeylElement> bruhat_interval_below(const RootSystem& rs, const WeylElement& w) {
  // Breadth-first over elements obtained by deleting letters of reduced words.
  std::vector<WeylElement> out;
  std::unordered_map<IntMatrix, bool, MatrixHash> seen;
  std::deque<WeylElement> queue{w};
  seen.emplace(w.matrix, true);
  while (!queue.empty()) {
    WeylElement cur = std::move(queue.front());
    queue.pop_front();
    const Word word = reduced_word(rs, cur);
    for (std::size_t k = 0; k < word.size(); ++k) {
      Word sub = word;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
      WeylElement z = element_from_word(rs, sub);
      if (z.length != cur.length - 1 || seen.count(z.matrix)) continue;
      seen.emplace(z.matrix, true);
      queue.push_back(std::move(z));
    }
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

WeylGroup::WeylGroup(RootSystem rs, std::size_t bound) : rs_(std::move(rs)) {
  elements_ = enumerate_group(rs_, bound);
  const int n = rank();
  ids_.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) ids_.emplace(elements_[k].matrix, static_cast<ElementId>(k));

  left_.resize(elements_.size() * static_cast<std::size_t>(n));
  right_.resize(elements_.size() * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (int i = 1; i <= n; ++i) {
      left_[index(static_cast<ElementId>(k), i)] = id_of_matrix(rs_.simple_reflection(i) * elements_[k].matrix);
      right_[index(static_cast<ElementId>(k), i)] = id_of_matrix(elements_[k].matrix * rs_.simple_reflection(i));
    }
  }

  words_.resize(elements_.size());
  for (std::size_t k = 1; k < elements_.size(); ++k) {
    const auto w = static_cast<ElementId>(k);
    for (int i = 1; i <= n; ++i) {
      const ElementId sw = left(i, w);
      if (length(sw) < length(w)) {
        words_[k].push_back(i);
        words_[k].insert(words_[k].end(), words_[sw].begin(), words_[sw].end());
        break;
      }
    }
  }
}

ElementId WeylGroup::id_of_matrix(const IntMatrix& m) const {
  auto it = ids_.find(m);
  if (it == ids_.end()) throw std::invalid_argument("matrix is not an element of W(" + rs_.label().to_string() + ")");
  return it->second;
}

ElementId WeylGroup::id_of(const WeylElement& w) const { return id_of_matrix(w.matrix); }

ElementId WeylGroup::from_word(const Word& word) const {
  ElementId w = identity();
  for (int i : word) {
    if (i < 1 || i > rank()) throw std::out_of_range("letter s" + std::to_string(i) + " out of range");
    w = right(w, i);
  }
  return w;
}

ElementId WeylGroup::multiply(ElementId a, ElementId b) const {
  for (int i : reduced_word(b)) a = right(a, i);
  return a;
}

ElementId WeylGroup::inverse(ElementId w) const {
  ElementId out = identity();
  for (int i : reduced_word(w)) out = left(i, out);
  return out;
}

bool WeylGroup::leq(ElementId w, ElementId v) const {
  while (length(v) > 0) {
    if (length(w) > length(v)) return false;
    const int i = reduced_word(v).front();  // first left descent
    const ElementId sw = left(i, w);
    if (length(sw) < length(w)) w = sw;
    v = left(i, v);
  }
  return w == identity();
}

std::vector<ElementId> WeylGroup::interval_below(ElementId w) const {
  std::vector<ElementId> out;
  for (ElementId z = 0; z <= w; ++z) {
    if (length(z) <= length(w) && leq(z, w)) out.push_back(z);
  }
  return out;
}

std::vector<ElementId> WeylGroup::interval_above(ElementId w) const {
  std::vector<ElementId> out;
  for (auto z = static_cast<std::size_t>(w); z < size(); ++z) {
    if (leq(w, static_cast<ElementId>(z))) out.push_back(static_cast<ElementId>(z));
  }
  return out;
}

bool WeylGroup::in_parabolic(ElementId w, const std::vector<int>& nodes) const {
  for (int i : reduced_word(w)) {
    if (std::find(nodes.begin(), nodes.end(), i) == nodes.end()) return false;
  }
  return true;
}

WeylElement transport_element(const DynkinInclusion& inc, const RootSystem& source, const RootSystem& target,
                              const WeylElement& w) {
  if (source.label() != inc.source() || target.label() != inc.target()) {
    throw std::invalid_argument("root systems do not match the inclusion");
  }
  Word word = reduced_word(source, w);
  for (int& i : word) i = inc.image(i);
  return element_from_word(target, word);
}

ElementId transport_element(const DynkinInclusion& inc, const WeylGroup& source, const WeylGroup& target,
                            ElementId w) {
  if (source.root_system().label() != inc.source() || target.root_system().label() != inc.target()) {
    throw std::invalid_argument("groups do not match the inclusion");
  }
  Word word = source.reduced_word(w);
  for (int& i : word) i = inc.image(i);
  return target.from_word(word);
}

}  // namespace eqs
