#include "irsplan/channel_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsplan {

namespace {

using cd = std::complex<double>;

struct Angles {
  double azimuth;
  double elevation;
};

Angles angles_towards(const Vec3& from, const Vec3& to) {
  const double d = distance(from, to);
  const double ex = (to.x - from.x) / d, ey = (to.y - from.y) / d, ez = (to.z - from.z) / d;
  const double horiz = std::hypot(ex, ey);
  return {horiz > 0 ? std::atan2(ey, ex) : 0.0, std::acos(std::clamp(ez, -1.0, 1.0))};
}

Vec3 worst_user_pos(const Scenario& sc, int node, int cell) {
  const Vec3 p = sc.node_pos(node);
  const CellRect& r = sc.cells[cell];
  Vec3 best{r.x0, r.y0, sc.user_height_m};
  double best_d = -1;
  for (double x : {r.x0, r.x1})
    for (double y : {r.y0, r.y1}) {
      const Vec3 c{x, y, sc.user_height_m};
      if (distance(p, c) > best_d) {
        best_d = distance(p, c);
        best = c;
      }
    }
  return best;
}

ComplexVector ula_response(const Scenario& sc, const Vec3& from, const Vec3& to, int length) {
  const auto a = angles_towards(from, to);
  const double s = sc.radio.spacing() / sc.radio.wavelength_m;
  return steering_vector(2.0 * s * std::cos(a.azimuth), length);
}

ComplexVector irs_response(const Scenario& sc, int irs_cell, const DeploymentPlan& plan,
                           const Vec3& towards) {
  ArrayGeometry geom{ArrayGeometry::Kind::planar_at_irs,
                     plan.tiles_at(irs_cell) * sc.radio.elements_per_tile_dim,
                     sc.radio.elements_per_tile_dim};
  const auto a = angles_towards(sc.node_pos(irs_cell), towards);
  return upa_response(a.azimuth, a.elevation, geom, sc.radio.spacing() / sc.radio.wavelength_m);
}

cd hop_scalar(const Scenario& sc, double dist) {
  const double kappa = std::sqrt(path_gain_sq(dist, sc.radio));
  const double phase = -2.0 * std::numbers::pi * dist / sc.radio.wavelength_m;
  return kappa * std::polar(1.0, phase);
}

}  // namespace

ComplexVector steering_vector(double spatial_freq, int length) {
  if (length < 1) throw std::invalid_argument("steering_vector: length must be >= 1");
  ComplexVector v(length);
  for (int k = 0; k < length; ++k)
    v[k] = std::polar(1.0, -std::numbers::pi * k * spatial_freq);
  return v;
}

ComplexVector upa_response(double azimuth, double elevation, const ArrayGeometry& geometry,
                           double spacing_over_wavelength) {
  if (geometry.kind != ArrayGeometry::Kind::planar_at_irs)
    throw std::invalid_argument("upa_response: planar geometry required");
  const ComplexVector ux =
      steering_vector(2.0 * spacing_over_wavelength * std::cos(azimuth) * std::sin(elevation),
                      geometry.nx);
  const ComplexVector uz =
      steering_vector(2.0 * spacing_over_wavelength * std::cos(elevation), geometry.nz);
  ComplexVector out(geometry.nx * geometry.nz);
  for (int i = 0; i < geometry.nx; ++i)
    for (int k = 0; k < geometry.nz; ++k) out[i * geometry.nz + k] = ux[i] * uz[k];
  return out;
}

std::vector<ComplexMatrix> build_channels(const Scenario& sc, const DeploymentPlan& plan,
                                          const std::vector<int>& path) {
  if (path.size() < 2) throw std::invalid_argument("build_channels: path too short");
  const int J = sc.num_cells();
  const int user_vertex = path.back();
  if (user_vertex < J) throw std::invalid_argument("build_channels: path must end at a user vertex");
  const int cell = user_vertex - J;

  std::vector<ComplexMatrix> hops;
  for (size_t h = 0; h + 1 < path.size(); ++h) {
    const int u = path[h];
    const int v = path[h + 1];
    if (u != 0 && plan.tiles_at(u) < 1)
      throw std::invalid_argument("build_channels: zero tiles at vertex " + std::to_string(u));
    const bool to_user = (h + 2 == path.size());
    if (to_user) {
      if (!sc.covers_cell(u, cell))
        throw std::invalid_argument("build_channels: missing LoS edge (" + std::to_string(u) +
                                    ", user " + std::to_string(cell) + ")");
      const Vec3 user = worst_user_pos(sc, u, cell);
      const double d = worst_case_distance(sc, u, cell);
      const ComplexVector tx = u == 0 ? ula_response(sc, sc.bs_pos, user, sc.radio.bs_antennas)
                                      : irs_response(sc, u, plan, user);
      hops.push_back(hop_scalar(sc, d) * tx.adjoint());
    } else {
      if (!sc.nodes_have_los(u, v))
        throw std::invalid_argument("build_channels: missing LoS edge (" + std::to_string(u) +
                                    ", " + std::to_string(v) + ")");
      if (plan.tiles_at(v) < 1)
        throw std::invalid_argument("build_channels: zero tiles at vertex " + std::to_string(v));
      const double d = distance(sc.node_pos(u), sc.node_pos(v));
      const ComplexVector rx = irs_response(sc, v, plan, sc.node_pos(u));
      const ComplexVector tx = u == 0 ? ula_response(sc, sc.bs_pos, sc.node_pos(v), sc.radio.bs_antennas)
                                      : irs_response(sc, u, plan, sc.node_pos(v));
      hops.push_back(hop_scalar(sc, d) * (rx * tx.adjoint()));
    }
  }
  return hops;
}

double explicit_path_snr(const Scenario& sc, const DeploymentPlan& plan,
                         const std::vector<int>& path, std::optional<int> airs_vertex) {
  if (path.size() < 2 || path.front() != 0)
    throw std::invalid_argument("explicit_path_snr: path must start at the BS");
  const int L = static_cast<int>(path.size()) - 2;
  int airs_pos = -1;  // 1-based among intermediates
  for (int m = 1; m <= L; ++m) {
    const bool active = plan.is_active(path[m]);
    if (airs_vertex && path[m] == *airs_vertex) {
      airs_pos = m;
    } else if (active) {
      throw std::invalid_argument("explicit_path_snr: more than one active intermediate");
    }
  }
  if (airs_vertex && airs_pos < 0)
    throw std::invalid_argument("explicit_path_snr: designated AIRS not on path");

  const auto hops = build_channels(sc, plan, path);
  const double sigma2 = sc.radio.noise_power_w;

  // maximum-ratio transmission toward the first hop; the rank-1 structure
  // makes any conjugated row of the first channel a valid MRT direction
  ComplexVector w = hops[0].row(0).adjoint();
  w *= std::sqrt(sc.radio.tx_power_w) / w.norm();

  if (L == 0) return std::norm((hops[0] * w)(0, 0)) / sigma2;

  // per-element alignment: make every summand of row0 * diag(phi) * v real
  auto aligned_phases = [](const ComplexMatrix& next, const ComplexVector& v) {
    ComplexVector phi(v.size());
    for (int n = 0; n < v.size(); ++n) phi[n] = std::polar(1.0, -std::arg(next(0, n) * v[n]));
    return phi;
  };

  ComplexVector v = hops[0] * w;  // signal at the current surface's elements

  // upstream of the amplifier (or the whole chain when all-passive)
  const int split = airs_pos > 0 ? airs_pos : L + 1;
  for (int m = 1; m < split; ++m) {
    const ComplexVector phi = aligned_phases(hops[m], v);
    v = hops[m] * phi.asDiagonal() * v;
  }
  if (airs_pos < 0) return std::norm(v(0)) / sigma2;  // v is 1x1 at the user

  // amplification factor from the per-element power budget
  const double incident = v.squaredNorm() / static_cast<double>(v.size());
  const double eta = std::sqrt(sc.radio.amp_power_per_element_w / (incident + sigma2));
  ComplexVector phi_airs = eta * aligned_phases(hops[airs_pos], v);

  // downstream chain as an explicit linear map from the amplifier output
  ComplexMatrix g = hops[airs_pos];
  ComplexVector vd = hops[airs_pos] * phi_airs.asDiagonal() * v;
  for (int m = airs_pos + 1; m <= L; ++m) {
    const ComplexVector phi = aligned_phases(hops[m], vd);
    g = hops[m] * phi.asDiagonal() * g;
    vd = hops[m] * phi.asDiagonal() * vd;
  }
  // g is 1 x N_airs; signal = g * phi_airs * v, amplification noise rides g * phi_airs
  const ComplexVector g_phi = (g * phi_airs.asDiagonal()).transpose();
  const double signal = std::norm((g * (phi_airs.asDiagonal() * v))(0, 0));
  const double noise = g_phi.squaredNorm() * sigma2 + sigma2;
  return signal / noise;
}

}  // namespace irsplan
