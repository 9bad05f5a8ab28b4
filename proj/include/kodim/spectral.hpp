#pragma once

#include "kodim/matrix.hpp"
#include "kodim/rational.hpp"

#include <complex>
#include <vector>

namespace kodim {

/// Polynomials are coefficient vectors, constant term first.

/// p / gcd(p, p'), made primitive with positive leading coefficient.
std::vector<BigInt> square_free_part(const std::vector<BigInt>& p);

/// All complex roots of a square-free integer polynomial, polished until the
/// Newton correction is below `tolerance` (relative to the root modulus).
std::vector<std::complex<long double>> polynomial_roots(const std::vector<BigInt>& p, long double tolerance);

/// Largest modulus of an eigenvalue of a square integer matrix. The
/// characteristic polynomial and its square-free part are computed exactly;
/// only the final root isolation is numerical. 0 for an empty matrix.
long double spectral_radius(const IntMatrix& m, long double tolerance);

}  // namespace kodim
