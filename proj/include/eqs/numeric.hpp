#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <string>

namespace eqs {

using BigInt = mpz_class;
using Rational = mpq_class;

// Integer matrices acting on the root lattice, in simple-root coordinates.
using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<int, Eigen::Dynamic, 1>;

inline std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace eqs
