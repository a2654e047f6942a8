#pragma once

#include "eqs/root_system.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace eqs {

// Sequence of simple indices (1-based). w = s_{w[0]} s_{w[1]} ... .
using Word = std::vector<int>;

Word parse_word(std::string_view text);  // "s2 s1 s3", "2,1,3", "" -> empty
std::string format_word(const Word& word);  // "s2 s1 s3"; empty word prints "e"

// A Weyl group element as its matrix on the root lattice (simple-root basis),
// with the length cached.
struct WeylElement {
  IntMatrix matrix;
  int length = 0;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

struct MatrixHash {
  std::size_t operator()(const IntMatrix& m) const;
};

// Length-then-lexicographic order over column-major matrix entries.
bool element_less(const WeylElement& a, const WeylElement& b);

// #{alpha in Phi+ : m(alpha) in Phi-}.
int inversion_count(const RootSystem& rs, const IntMatrix& m);

WeylElement identity_element(const RootSystem& rs);
WeylElement make_element(const RootSystem& rs, IntMatrix m);
// Letters out of range throw std::out_of_range. The word need not be reduced.
WeylElement element_from_word(const RootSystem& rs, const Word& word);
WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

// Greedy: smallest i with l(s_i w) < l(w), then recurse on s_i w.
Word reduced_word(const RootSystem& rs, const WeylElement& w);
bool is_reduced_for(const RootSystem& rs, const Word& word, const WeylElement& w);

// Lifting recursion on a left descent of v.
bool bruhat_leq(const RootSystem& rs, const WeylElement& w, const WeylElement& v);

inline constexpr std::size_t kDefaultEnumerationBound = 1'000'000;

class EnumerationBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::size_t bound = kDefaultEnumerationBound);
std::vector<WeylElement> bruhat_interval_below(const RootSystem& rs, const WeylElement& w);

using ElementId = std::uint32_t;

// The fully enumerated group, with elements indexed in (length, matrix) order
// so that ids increase along any chain in Bruhat order. Immutable after
// construction.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs, std::size_t bound = kDefaultEnumerationBound);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t size() const { return elements_.size(); }

  ElementId identity() const { return 0; }
  ElementId longest() const { return static_cast<ElementId>(elements_.size() - 1); }

  const WeylElement& element(ElementId id) const { return elements_.at(id); }
  int length(ElementId id) const { return elements_[id].length; }
  const Word& reduced_word(ElementId id) const { return words_.at(id); }

  // s_i w and w s_i, i 1-based.
  ElementId left(int i, ElementId w) const { return left_[index(w, i)]; }
  ElementId right(ElementId w, int i) const { return right_[index(w, i)]; }
  bool is_left_descent(int i, ElementId w) const { return length(left(i, w)) < length(w); }
  bool is_right_descent(ElementId w, int i) const { return length(right(w, i)) < length(w); }

  ElementId id_of(const WeylElement& w) const;
  ElementId id_of_matrix(const IntMatrix& m) const;
  ElementId from_word(const Word& word) const;
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId w) const;

  bool leq(ElementId w, ElementId v) const;
  std::vector<ElementId> interval_below(ElementId w) const;
  std::vector<ElementId> interval_above(ElementId w) const;

  // Elements with a reduced word using only the given nodes.
  bool in_parabolic(ElementId w, const std::vector<int>& nodes) const;

 private:
  std::size_t index(ElementId w, int i) const {
    return static_cast<std::size_t>(w) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(i - 1);
  }

  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::vector<Word> words_;
  std::vector<ElementId> left_;
  std::vector<ElementId> right_;
  std::unordered_map<IntMatrix, ElementId, MatrixHash> ids_;
};

// Image of w under an inclusion D -> E, via a reduced word with letters renamed.
WeylElement transport_element(const DynkinInclusion& inc, const RootSystem& source, const RootSystem& target,
                              const WeylElement& w);
ElementId transport_element(const DynkinInclusion& inc, const WeylGroup& source, const WeylGroup& target,
                            ElementId w);

}  // namespace eqs
