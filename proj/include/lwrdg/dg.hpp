#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lwrdg/flux_model.hpp"
#include "lwrdg/mesh.hpp"

namespace lwrdg {

inline constexpr int kMaxDegree = 3;

// Scaled Legendre basis on the reference cell, xi = (x - x_j) / (dx_j / 2):
// 1, xi, xi^2 - 1/3, xi^3 - (3/5) xi. Mass matrix is diagonal.
double basis_value(int mode, double xi);
double basis_derivative(int mode, double xi);
double basis_mass(int mode);  // integral of psi_l^2 over [-1, 1]

/// One road's DG solution: per-cell modal coefficients of the density.
/// The cell average is the zeroth mode.
class RoadState {
 public:
  RoadState(Mesh1D mesh, int degree);

  int degree() const { return degree_; }
  int n_cells() const { return mesh_.n_cells(); }
  const Mesh1D& mesh() const { return mesh_; }

  double& mode(int cell, int l) { return coeffs_[cell * (degree_ + 1) + l]; }
  double mode(int cell, int l) const { return coeffs_[cell * (degree_ + 1) + l]; }
  double average(int cell) const { return mode(cell, 0); }

  double evaluate(int cell, double xi) const;
  double evaluate_at(double x) const;  // global coordinate
  double trace_left(int cell) const;   // limit from inside at the cell's left edge
  double trace_right(int cell) const;  // limit from inside at the cell's right edge

  std::span<double> coeffs() { return coeffs_; }
  std::span<const double> coeffs() const { return coeffs_; }

 private:
  void check_cell(int cell) const;
  Mesh1D mesh_;
  int degree_;
  std::vector<double> coeffs_;
};

using DensityField = std::function<double(double)>;

/// L2 projection of initial data onto the modal basis, by Gauss-Legendre
/// quadrature with max(k+2, 6) points per cell.
RoadState project_initial(const Mesh1D& mesh, int degree, const DensityField& rho0);

struct RoadResidual {
  std::vector<double> coeffs;  // same layout as RoadState
};

/// Semi-discrete DG operator d(coeffs)/dt. The fluxes at the road's two end
/// interfaces come from the caller (junction coupling or open boundaries);
/// interior interfaces use the requested numerical flux. Volume terms use
/// (k+2)-point Gauss-Legendre, exact for quadratic flux functions.
RoadResidual dg_residual(const RoadState& state, const FluxModel& model,
                         NumericalFlux flux_kind, double flux_left_boundary,
                         double flux_right_boundary);

struct SamplePoint {
  double x;
  double value;
  double cell_average;
};

/// m equally spaced samples per cell, endpoints included for m >= 2.
std::vector<SamplePoint> sample_road(const RoadState& state, int samples_per_cell);

}  // namespace lwrdg
