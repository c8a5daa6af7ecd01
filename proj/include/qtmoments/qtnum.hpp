#pragma once

#include "qtmoments/ring.hpp"

namespace qtmoments {

/// [n]_{q,t} = sum_{k=1..n} t^{n-k} q^{k-1}; [0] = 0.
Polynomial qt_number(unsigned n);

/// prod_{k=1..n} [k]_{q,t}; empty product is 1.
Polynomial qt_factorial(unsigned n);

}  // namespace qtmoments
