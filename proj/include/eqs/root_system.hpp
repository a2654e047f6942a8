#pragma once

#include "eqs/numeric.hpp"
#include "eqs/poly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqs {

enum class Family { A, B, C, D, F, G };

char family_letter(Family f);
// Display glyph for polynomial variables: a, b, c, d for A-D, z for F4, g for G2.
char display_glyph(Family f);

class TypeLabel {
 public:
  // Throws std::invalid_argument for ranks outside the family's range.
  TypeLabel(Family family, int rank);

  // "A2", "b3", "F4", ...
  static TypeLabel parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool is_classical() const { return family_ != Family::F && family_ != Family::G; }
  std::string to_string() const;

  friend auto operator<=>(const TypeLabel&, const TypeLabel&) = default;

 private:
  Family family_;
  int rank_;
};

// Coefficients of a root in the simple-root basis.
using Root = IntVector;

// alpha = s_{word[0]} ... s_{word[k-1]} (alpha_simple); indices 1-based.
struct ReflectionExpr {
  std::vector<int> word;
  int simple = 0;
};

IntMatrix cartan_matrix(const TypeLabel& label);

// Immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(TypeLabel label);

  const TypeLabel& label() const { return label_; }
  int rank() const { return label_.rank(); }
  const IntMatrix& cartan() const { return cartan_; }

  // Sorted by height, then lexicographically by coordinates.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const ReflectionExpr& reflection_expr(std::size_t index) const { return exprs_.at(index); }
  std::optional<std::size_t> positive_root_index(const Root& alpha) const;
  bool is_root(const Root& alpha) const;

  // 1-based.
  Root simple_root(int i) const;
  const IntMatrix& simple_reflection(int i) const;

  // Order of the Weyl group from the classification formula.
  std::size_t group_order() const;

 private:
  TypeLabel label_;
  IntMatrix cartan_;
  std::vector<IntMatrix> simple_reflections_;
  std::vector<Root> positive_roots_;
  std::vector<ReflectionExpr> exprs_;
  std::map<std::vector<int>, std::size_t> index_;
};

// s_i(alpha_j) = alpha_j - A[i][j] alpha_i, as a matrix on column vectors.
IntMatrix simple_reflection_matrix(const RootSystem& rs, int i);

// s_alpha = w s_i w^{-1} where alpha = w(alpha_i). Throws std::invalid_argument
// unless alpha is a positive root.
IntMatrix reflection_in_root(const RootSystem& rs, const Root& alpha);

// Arrow-respecting injection of Dynkin diagrams, encoded by Cartan-entry
// preservation. node_map[i-1] is the image of source node i.
class DynkinInclusion {
 public:
  // Throws std::invalid_argument if the map is not an injective,
  // Cartan-preserving map into the target's nodes.
  DynkinInclusion(TypeLabel source, TypeLabel target, std::vector<int> node_map);

  const TypeLabel& source() const { return source_; }
  const TypeLabel& target() const { return target_; }
  const std::vector<int>& node_map() const { return node_map_; }
  int image(int node) const { return node_map_.at(static_cast<std::size_t>(node - 1)); }

  // psi: alpha_i -> beta_{image(i)}.
  VariableMap substitution() const;

  static bool is_valid(const TypeLabel& source, const TypeLabel& target, const std::vector<int>& node_map);
  // "1:2,2:3,3:4" -> {2, 3, 4}
  static std::vector<int> parse_node_map(std::string_view text);

 private:
  TypeLabel source_;
  TypeLabel target_;
  std::vector<int> node_map_;
};

// D_{n+1} -> B_n: delta_1, delta_2 -> beta_1 and delta_k -> beta_{k-1} for k >= 3.
VariableMap folding_substitution(const TypeLabel& source, const TypeLabel& target);

}  // namespace eqs
