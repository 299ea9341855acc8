// Copyright (c) 2026 The tevie Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TEVIE_SCENE_HPP
#define TEVIE_SCENE_HPP

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace tevie {

using Complex = std::complex<double>;

/// Lossless homogeneous background. The wavenumber is always derived,
/// never stored, so it cannot drift out of sync.
struct BackgroundMedium {
  double omega;   // angular frequency, rad/s
  double eps_b;   // permittivity, F/m
  double mu_b;    // permeability, H/m

  double wavenumber() const { return omega * std::sqrt(eps_b * mu_b); }
  double wave_impedance() const { return std::sqrt(mu_b / eps_b); }
};

/// Uniform square-cell grid. Cell (i1, i2) has center
/// origin + ((i1 + 1/2) h, (i2 + 1/2) h); cells are flattened i1-fastest.
struct Grid2D {
  Eigen::Vector2d origin;
  double h;
  int n1;
  int n2;

  int num_cells() const { return n1 * n2; }
  int cell_index(int i1, int i2) const { return i1 + n1 * i2; }
  Eigen::Vector2d cell_center(int i1, int i2) const {
    return {origin.x() + (i1 + 0.5) * h, origin.y() + (i2 + 0.5) * h};
  }
  Eigen::Vector2d cell_center(int n) const {
    return cell_center(n % n1, n / n1);
  }
};

/// Per-cell electric and magnetic contrast relative to the background.
struct ContrastMap {
  std::vector<Complex> chi_e;
  std::vector<Complex> chi_m;
  /// When set, validation additionally requires Im(chi) >= 0 on both maps
  /// (no gain under the e^{-i omega t} convention).
  bool declared_passive = false;
};

/// Incident TE plane wave, normalized by its out-of-plane H amplitude.
struct PlaneWaveTE {
  Eigen::Vector2d direction;  // unit propagation direction
  Complex amplitude_h3;       // A/m
};

/// Field unknowns on the grid, flattened as [all E1 | all E2 | all H3].
using FieldVector = Eigen::VectorXcd;

/// Immutable validated problem description.
class Scene {
 public:
  Scene(BackgroundMedium medium, Grid2D grid, ContrastMap contrast);

  const BackgroundMedium& medium() const { return medium_; }
  const Grid2D& grid() const { return grid_; }
  int num_cells() const { return grid_.num_cells(); }
  const Complex& chi_e(int n) const { return contrast_.chi_e[n]; }
  const Complex& chi_m(int n) const { return contrast_.chi_m[n]; }
  const ContrastMap& contrast() const { return contrast_; }

  /// Cells per wavelength diagnostic; documentation recommends <= pi/5.
  double kb_h() const { return medium_.wavenumber() * grid_.h; }

 private:
  BackgroundMedium medium_;
  Grid2D grid_;
  ContrastMap contrast_;
};

/// Validates and freezes a scene. Throws config_error on size mismatch,
/// non-finite values, or non-positive medium/grid parameters.
Scene make_scene(const BackgroundMedium& medium, const Grid2D& grid,
                 ContrastMap contrast);

/// Incident-field grid samples in [E1|E2|H3] block order. The triple
/// satisfies the source-free background field equations in closed form:
///   H3 = a e^{i kb d.x},  (E1, E2) = a Z_b e^{i kb d.x} (-d2, d1),
/// with Z_b the background wave impedance.
FieldVector incident_fields(const PlaneWaveTE& wave, const Scene& scene);

}  // namespace tevie

#endif  // TEVIE_SCENE_HPP
