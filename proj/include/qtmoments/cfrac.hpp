#pragma once

#include <string>
#include <vector>

#include "qtmoments/orthopoly.hpp"

namespace qtmoments {

class InsufficientDepth : public Error {
public:
    using Error::Error;
};

/// 1/(1 - b_0 z - lam_1 z^2/(1 - b_1 z - ... lam_depth z^2/(1 - b_depth z))).
struct ContinuedFractionSpec {
    int depth = 0;
    std::vector<Polynomial> b;    // b_0..b_depth
    std::vector<Polynomial> lam;  // lam_1..lam_depth, lam[i] holds lam_{i+1}
};

/// Smallest depth that determines the series up to `order`.
inline int minimal_depth(int order) { return (order + 1) / 2; }
/// Depth used when the caller does not choose one.
inline int default_depth(int order) { return minimal_depth(order) + 1; }

ContinuedFractionSpec cf_spec(const JacobiParams& j, int depth);

/// Series coefficients z^0..z^order; throws InsufficientDepth when
/// spec.depth < ceil(order/2).
std::vector<Polynomial> cf_series(const ContinuedFractionSpec& spec, int order);

/// Nested staircase rendering of the fraction.
std::string render_cf(const ContinuedFractionSpec& spec);

}  // namespace qtmoments
