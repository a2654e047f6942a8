#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace eqs {

// Exact feasibility of {x >= 0 : A x = b} by phase-one simplex with Bland's
// rule. Scalar must be an exact ordered field (e.g. mpq_class).
template <class Scalar>
class FeasibilityProblem {
 public:
  FeasibilityProblem(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)), b_(rows, Scalar(0)) {}

  Scalar& a(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Scalar& b(std::size_t r) { return b_[r]; }

  // On success, fills `solution` (when non-null) with a feasible x.
  bool feasible(std::vector<Scalar>* solution = nullptr) const {
    // Tableau [A | I | b] with artificials basic; objective row last.
    const std::size_t width = cols_ + rows_ + 1;
    const std::size_t rhs = width - 1;
    std::vector<Scalar> t((rows_ + 1) * width, Scalar(0));
    auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return t[r * width + c]; };
    std::vector<std::size_t> basis(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      const bool flip = b_[r] < 0;
      for (std::size_t c = 0; c < cols_; ++c) at(r, c) = flip ? Scalar(-a_[r * cols_ + c]) : a_[r * cols_ + c];
      at(r, cols_ + r) = 1;
      at(r, rhs) = flip ? Scalar(-b_[r]) : b_[r];
      basis[r] = cols_ + r;
    }
    // Reduced costs of sum(artificials); the rhs slot holds minus its value.
    for (std::size_t c = 0; c < cols_; ++c) {
      Scalar s = 0;
      for (std::size_t r = 0; r < rows_; ++r) s -= at(r, c);
      at(rows_, c) = s;
    }
    {
      Scalar s = 0;
      for (std::size_t r = 0; r < rows_; ++r) s -= at(r, rhs);
      at(rows_, rhs) = s;
    }

    while (true) {
      std::size_t enter = width;
      for (std::size_t c = 0; c + 1 < width; ++c) {
        if (at(rows_, c) < 0) {
          enter = c;
          break;
        }
      }
      if (enter == width) break;

      std::size_t leave = rows_;
      Scalar best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, enter) > 0) {
          Scalar ratio = at(r, rhs) / at(r, enter);
          if (leave == rows_ || ratio < best || (ratio == best && basis[r] < basis[leave])) {
            leave = r;
            best = ratio;
          }
        }
      }
      if (leave == rows_) throw std::logic_error("phase-one objective is bounded below; unbounded ray found");

      const Scalar pivot = at(leave, enter);
      for (std::size_t c = 0; c < width; ++c) at(leave, c) /= pivot;
      for (std::size_t r = 0; r <= rows_; ++r) {
        if (r == leave) continue;
        const Scalar factor = at(r, enter);
        if (factor == 0) continue;
        for (std::size_t c = 0; c < width; ++c) at(r, c) -= factor * at(leave, c);
      }
      basis[leave] = enter;
    }

    if (at(rows_, rhs) != 0) return false;
    if (solution) {
      solution->assign(cols_, Scalar(0));
      for (std::size_t r = 0; r < rows_; ++r) {
        if (basis[r] < cols_) (*solution)[basis[r]] = at(r, rhs);
      }
    }
    return true;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> a_;
  std::vector<Scalar> b_;
};

}  // namespace eqs
