#pragma once

#include <span>
#include <vector>

#include "sigma/recursion.hpp"

namespace sigma {

/// P(z) for coefficients p_0, ..., p_n (ascending powers).
complex evaluate(std::span<const double> coeffs, complex z);

/// All n roots of p_0 + ... + p_n z^n (p_n != 0) by Aberth-Ehrlich iteration
/// followed by Newton polishing. Throws RootFindingFailure when the iteration
/// does not settle.
std::vector<complex> polynomial_roots(std::span<const double> coeffs);

}  // namespace sigma
