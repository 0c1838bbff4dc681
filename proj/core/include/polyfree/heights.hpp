#pragma once

#include <vector>

#include "polyfree/rational.hpp"

namespace polyfree {

/// Reduced rationals of height |num| + den == h, in the canonical search
/// order: positives before negatives, denominators ascending within a sign.
/// Height 1 is {0}.
std::vector<Rational> rationals_of_height(long long h);

/// The idx-th rational in the height enumeration (0 -> 0, then 1, -1, 2, 1/2,
/// -2, -1/2, ...). Deterministic grid for structured searches.
Rational nth_rational(std::size_t idx);

} // namespace polyfree
