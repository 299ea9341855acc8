// Copyright (c) 2026 The tevie Authors
// SPDX-License-Identifier: Apache-2.0

#include "tevie/specfun.hpp"

#include <cmath>

#include "tevie/errors.hpp"

namespace tevie {
namespace {

using quad = __float128;
using cplx = std::complex<double>;

// pi and gamma as hi+lo double pairs; each double is exact, the sum carries
// ~32 significant digits into quad arithmetic.
const quad kPiQ = quad(3.141592653589793) + quad(1.2246467991473532e-16);
const quad kGammaQ = quad(0.5772156649015329) + quad(-4.942915152430645e-18);

// Seam between the convergent ascending series (summed in quad precision,
// which keeps the alternating-series cancellation harmless) and the
// large-argument Hankel expansion, whose truncation floor drops below
// double rounding for x >= 18.
constexpr double kSeriesAsymptoticSeam = 18.0;

struct SeriesResult {
  double j;  // J_order(x)
  double y;  // Y_order(x)
};

// Ascending power series for J0/Y0 or J1/Y1, carried in quad precision.
SeriesResult ascending_series(int order, double x) {
  const quad xq = quad(x);
  const quad q = xq * xq / 4;
  const quad log_half_x = quad(std::log(0.5 * x));  // exact-half scaling

  quad term = 1;        // q^k / (k! (k+order)!)
  quad harmonic = 0;    // H_k
  quad sum_j = 0;
  quad sum_y = 0;       // order 0: sum (-1)^{k+1} H_k t_k
                        // order 1: sum (-1)^k (H_k + H_{k+1}) s_k
  quad prev = 0;
  int sign = 1;
  for (int k = 0; k < 300; ++k) {
    sum_j += sign * term;
    if (order == 0) {
      sum_y += -sign * harmonic * term;
    } else {
      sum_y += sign * (2 * harmonic + quad(1) / (k + 1)) * term;
    }
    const quad mag = term < 0 ? -term : term;
    if (k > 0 && mag < prev && mag < quad(1e-38)) break;
    prev = mag;
    harmonic += quad(1) / (k + 1);
    term *= q / ((k + 1) * (k + 1 + order));
    sign = -sign;
  }

  SeriesResult out{};
  const quad log_term = log_half_x + kGammaQ;
  if (order == 0) {
    const quad j0 = sum_j;
    out.j = double(j0);
    out.y = double((2 / kPiQ) * (log_term * j0 + sum_y));
  } else {
    const quad j1 = (xq / 2) * sum_j;
    out.j = double(j1);
    if (x > 0.0) {
      out.y = double((2 / kPiQ) * log_term * j1 - 2 / (kPiQ * xq) -
                     (xq / (2 * kPiQ)) * sum_y);
    }
  }
  return out;
}

// Hankel's expansion H_n^(1)(x) ~ sqrt(2/(pi x)) e^{i(x - n pi/2 - pi/4)} S,
// S = sum_k i^k a_k(n) / x^k. Truncated at the first non-decreasing term.
cplx hankel_asymptotic(int order, double x) {
  const double mu = 4.0 * order * order;
  cplx sum(1.0, 0.0);
  cplx term(1.0, 0.0);
  double prev_mag = 1.0;
  for (int k = 1; k <= 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= cplx(0.0, 1.0) * ((mu - odd * odd) / (8.0 * k * x));
    const double mag = std::abs(term);
    if (mag >= prev_mag) break;
    sum += term;
    prev_mag = mag;
    if (mag < 1e-18) break;
  }
  const double phase = x - (2 * order + 1) * (M_PI / 4.0);
  const double amp = std::sqrt(2.0 / (M_PI * x));
  return amp * std::polar(1.0, phase) * sum;
}

void require_finite(double x) {
  if (!std::isfinite(x)) throw domain_error("specfun: non-finite argument");
}

}  // namespace

double bessel_j(CylOrder order, double x) {
  require_finite(x);
  if (x < 0.0) throw domain_error("bessel_j: negative argument");
  if (x <= kSeriesAsymptoticSeam)
    return ascending_series(static_cast<int>(order), x).j;
  return hankel_asymptotic(static_cast<int>(order), x).real();
}

double bessel_y(CylOrder order, double x) {
  require_finite(x);
  if (x <= 0.0) throw domain_error("bessel_y: argument must be positive");
  if (x <= kSeriesAsymptoticSeam)
    return ascending_series(static_cast<int>(order), x).y;
  return hankel_asymptotic(static_cast<int>(order), x).imag();
}

std::complex<double> hankel1(CylOrder order, double x) {
  require_finite(x);
  if (x <= 0.0) throw domain_error("hankel1: argument must be positive");
  if (x <= kSeriesAsymptoticSeam) {
    const auto s = ascending_series(static_cast<int>(order), x);
    return {s.j, s.y};
  }
  return hankel_asymptotic(static_cast<int>(order), x);
}

}  // namespace tevie
