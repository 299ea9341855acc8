// Copyright (c) 2026 The tevie Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TEVIE_SPECFUN_HPP
#define TEVIE_SPECFUN_HPP

#include <complex>

namespace tevie {

/// Cylinder-function order. Only 0 and 1 appear in the 2D kernels.
enum class CylOrder : int { zero = 0, one = 1 };

/// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Bessel function of the first kind, J0 or J1, for x >= 0.
/// Accurate to ~1e-12 relative to the oscillation envelope on [0, 50].
double bessel_j(CylOrder order, double x);

/// Bessel function of the second kind (Neumann function), Y0 or Y1, x > 0.
double bessel_y(CylOrder order, double x);

/// Hankel function of the first kind, H0^(1) or H1^(1), x > 0.
/// Outgoing-wave convention for time dependence e^{-i omega t}.
std::complex<double> hankel1(CylOrder order, double x);

}  // namespace tevie

#endif  // TEVIE_SPECFUN_HPP
