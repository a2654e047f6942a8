#include "eqs/signed_permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace eqs {

namespace {

void require_classical(const TypeLabel& label) {
  if (!label.is_classical()) {
    throw std::invalid_argument("one-line notation is not defined for type " + label.to_string());
  }
}

std::size_t one_line_size(const TypeLabel& label) {
  return static_cast<std::size_t>(label.family() == Family::A ? label.rank() + 1 : label.rank());
}

bool is_right_descent(const TypeLabel& label, const SignedPermutation& w, int i) {
  const auto& e = w.entries;
  auto at = [&](int pos) { return e[static_cast<std::size_t>(pos - 1)]; };
  switch (label.family()) {
    case Family::A: return at(i) > at(i + 1);
    case Family::B:
    case Family::C: return i == 1 ? at(1) < 0 : at(i - 1) > at(i);
    case Family::D:
      if (i == 1) return at(1) + at(2) < 0;
      if (i == 2) return at(1) > at(2);
      return at(i - 1) > at(i);
    default: break;
  }
  return false;
}

}  // namespace

SignedPermutation parse_one_line(std::string_view text) {
  SignedPermutation w;
  const bool separated = std::any_of(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',';
  });
  if (!separated && !text.empty() && text.find('-') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad one-line entry");
      w.entries.push_back(c - '0');
    }
    return w;
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    char* end = nullptr;
    const long v = std::strtol(token.c_str(), &end, 10);
    if (*end != '\0') throw std::invalid_argument("bad one-line entry '" + token + "'");
    w.entries.push_back(static_cast<int>(v));
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return w;
}

std::string format_one_line(const SignedPermutation& w) {
  std::ostringstream out;
  for (std::size_t k = 0; k < w.entries.size(); ++k) out << (k ? " " : "") << w.entries[k];
  return out.str();
}

int sign_count(const SignedPermutation& w) {
  return static_cast<int>(std::count_if(w.entries.begin(), w.entries.end(), [](int x) { return x < 0; }));
}

void validate_one_line(const TypeLabel& label, const SignedPermutation& w) {
  require_classical(label);
  const std::size_t n = one_line_size(label);
  if (w.size() != n) {
    throw std::invalid_argument("one-line notation for " + label.to_string() + " needs " + std::to_string(n) +
                                " entries, got " + std::to_string(w.size()));
  }
  std::vector<bool> seen(n + 1, false);
  for (int x : w.entries) {
    const auto a = static_cast<std::size_t>(std::abs(x));
    if (x == 0 || a > n || seen[a]) throw std::invalid_argument("not a signed permutation: " + format_one_line(w));
    seen[a] = true;
  }
  if (label.family() == Family::A && sign_count(w) != 0) {
    throw std::invalid_argument("type A permutations have no negative entries");
  }
  if (label.family() == Family::D && sign_count(w) % 2 != 0) {
    throw std::invalid_argument("type D signed permutations have an even number of negative entries");
  }
}

SignedPermutation identity_one_line(const TypeLabel& label) {
  require_classical(label);
  SignedPermutation w;
  for (std::size_t k = 1; k <= one_line_size(label); ++k) w.entries.push_back(static_cast<int>(k));
  return w;
}

SignedPermutation apply_right(const TypeLabel& label, SignedPermutation w, int i) {
  require_classical(label);
  if (i < 1 || i > label.rank()) throw std::out_of_range("letter out of range");
  auto& e = w.entries;
  auto swap_positions = [&](int p, int q) { std::swap(e[static_cast<std::size_t>(p - 1)], e[static_cast<std::size_t>(q - 1)]); };
  switch (label.family()) {
    case Family::A: swap_positions(i, i + 1); break;
    case Family::B:
    case Family::C:
      if (i == 1) {
        e[0] = -e[0];
      } else {
        swap_positions(i - 1, i);
      }
      break;
    case Family::D:
      if (i == 1) {
        swap_positions(1, 2);
        e[0] = -e[0];
        e[1] = -e[1];
      } else if (i == 2) {
        swap_positions(1, 2);
      } else {
        swap_positions(i - 1, i);
      }
      break;
    default: break;
  }
  return w;
}

SignedPermutation one_line_from_word(const TypeLabel& label, const Word& word) {
  SignedPermutation w = identity_one_line(label);
  for (int i : word) w = apply_right(label, std::move(w), i);
  return w;
}

Word word_from_one_line(const TypeLabel& label, const SignedPermutation& w) {
  validate_one_line(label, w);
  SignedPermutation cur = w;
  Word stripped;
  const std::size_t n = one_line_size(label);
  const std::size_t max_steps = n * n + n;
  while (true) {
    int descent = 0;
    for (int i = 1; i <= label.rank(); ++i) {
      if (is_right_descent(label, cur, i)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    cur = apply_right(label, std::move(cur), descent);
    stripped.push_back(descent);
    if (stripped.size() > max_steps) throw std::logic_error("descent stripping did not terminate");
  }
  // w s_{j1} ... s_{jk} = e, so w = s_{jk} ... s_{j1}.
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

WeylElement element_from_one_line(const RootSystem& rs, const SignedPermutation& w) {
  return element_from_word(rs, word_from_one_line(rs.label(), w));
}

SignedPermutation one_line_of(const RootSystem& rs, const WeylElement& w) {
  return one_line_from_word(rs.label(), reduced_word(rs, w));
}

ElementId id_from_one_line(const WeylGroup& g, const SignedPermutation& w) {
  return g.from_word(word_from_one_line(g.root_system().label(), w));
}

SignedPermutation one_line_of(const WeylGroup& g, ElementId w) {
  return one_line_from_word(g.root_system().label(), g.reduced_word(w));
}

std::string format_element(const WeylGroup& g, ElementId w) {
  if (g.root_system().label().is_classical()) return format_one_line(one_line_of(g, w));
  return format_word(g.reduced_word(w));
}

ElementId parse_element(const WeylGroup& g, std::string_view text) {
  std::string trimmed(text);
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
  if (trimmed.empty() || trimmed == "e") return g.identity();
  const bool has_s = trimmed.find_first_of("sS") != std::string::npos;
  if (has_s || !g.root_system().label().is_classical()) return g.from_word(parse_word(trimmed));
  return id_from_one_line(g, parse_one_line(trimmed));
}

}  // namespace eqs
