#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "irsplan/scenario.hpp"
#include "irsplan/snr_core.hpp"

namespace irsplan {

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// ULA at the BS or UPA at a surface. Linear arrays have nz = 1.
struct ArrayGeometry {
  enum class Kind { linear_at_bs, planar_at_irs };
  Kind kind = Kind::linear_at_bs;
  int nx = 1;
  int nz = 1;

  int size() const { return nx * nz; }
};

/// Entry k = exp(-j pi k sigma), k = 0..length-1.
ComplexVector steering_vector(double spatial_freq, int length);

/// UPA response as the Kronecker product of the x- and z-direction
/// steering vectors; all entries unit modulus.
ComplexVector upa_response(double azimuth, double elevation, const ArrayGeometry& geometry,
                           double spacing_over_wavelength);

/// Per-hop explicit channel matrices (rows = receive side) for the path,
/// built from 3D geometry. A T-tile surface is a (T*N) x N planar array.
std::vector<ComplexMatrix> build_channels(const Scenario& sc, const DeploymentPlan& plan,
                                          const std::vector<int>& path);

/// Matrix-level SNR evaluation with explicit beamforming: maximum-ratio
/// transmission at the BS, per-element phase alignment at each surface,
/// and the power-constrained amplification factor at the active one.
/// Used to verify the closed-form route.
double explicit_path_snr(const Scenario& sc, const DeploymentPlan& plan,
                         const std::vector<int>& path, std::optional<int> airs_vertex);

}  // namespace irsplan
