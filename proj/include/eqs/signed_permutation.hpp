#pragma once

#include "eqs/weyl.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eqs {

// One-line notation. Type A uses an ordinary permutation of {1..rank+1};
// types B, C, D use signed permutations of {1..rank}.
//
// Right multiplication by a simple reflection acts on positions:
//   A:    s_i swaps positions i, i+1
//   B, C: s_1 negates position 1; s_i (i >= 2) swaps positions i-1, i
//   D:    s_1 swaps positions 1, 2 and negates both; s_2 swaps positions 1, 2;
//         s_i (i >= 3) swaps positions i-1, i
// The D convention is an I/O choice only.
struct SignedPermutation {
  std::vector<int> entries;

  std::size_t size() const { return entries.size(); }
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

// "3 -2 1", "3,-2,1", or compact digits "351624" (entries below 10 only).
SignedPermutation parse_one_line(std::string_view text);
std::string format_one_line(const SignedPermutation& w);

// Number of negative entries.
int sign_count(const SignedPermutation& w);

// Throws std::invalid_argument when w is not an element for this type.
void validate_one_line(const TypeLabel& label, const SignedPermutation& w);

SignedPermutation identity_one_line(const TypeLabel& label);
SignedPermutation apply_right(const TypeLabel& label, SignedPermutation w, int i);
SignedPermutation one_line_from_word(const TypeLabel& label, const Word& word);
// A reduced word, found by stripping right descents.
Word word_from_one_line(const TypeLabel& label, const SignedPermutation& w);

WeylElement element_from_one_line(const RootSystem& rs, const SignedPermutation& w);
SignedPermutation one_line_of(const RootSystem& rs, const WeylElement& w);
ElementId id_from_one_line(const WeylGroup& g, const SignedPermutation& w);
SignedPermutation one_line_of(const WeylGroup& g, ElementId w);

// One-line form for classical types, canonical reduced word otherwise.
std::string format_element(const WeylGroup& g, ElementId w);
// Accepts words ("s2 s1", "", "e") in every type; integer lists without an
// 's' prefix are read as one-line notation in types A-D and as words in F, G.
ElementId parse_element(const WeylGroup& g, std::string_view text);

}  // namespace eqs
