#pragma once

#include <vector>

#include "qtmoments/ring.hpp"

namespace qtmoments {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// det of the leading k x k blocks, k = 1..size, read off the pivots of an
/// exact elimination without row exchanges.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

}  // namespace qtmoments
