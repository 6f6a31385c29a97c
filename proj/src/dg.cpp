#include "lwrdg/dg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "lwrdg/quadrature.hpp"

namespace lwrdg {

double basis_value(int mode, double xi) {
  switch (mode) {
    case 0: return 1.0;
    case 1: return xi;
    case 2: return xi * xi - 1.0 / 3.0;
    case 3: return xi * xi * xi - 0.6 * xi;
    default: throw std::out_of_range("basis_value: mode must be in [0, 3]");
  }
}

double basis_derivative(int mode, double xi) {
  switch (mode) {
    case 0: return 0.0;
    case 1: return 1.0;
    case 2: return 2.0 * xi;
    case 3: return 3.0 * xi * xi - 0.6;
    default: throw std::out_of_range("basis_derivative: mode must be in [0, 3]");
  }
}

double basis_mass(int mode) {
  switch (mode) {
    case 0: return 2.0;
    case 1: return 2.0 / 3.0;
    case 2: return 8.0 / 45.0;
    case 3: return 8.0 / 175.0;
    default: throw std::out_of_range("basis_mass: mode must be in [0, 3]");
  }
}

RoadState::RoadState(Mesh1D mesh, int degree)
    : mesh_(std::move(mesh)), degree_(degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw std::invalid_argument("RoadState: degree must be in [0, 3]");
  coeffs_.assign(static_cast<std::size_t>(mesh_.n_cells()) * (degree_ + 1), 0.0);
}

void RoadState::check_cell(int cell) const {
  if (cell < 0 || cell >= n_cells())
    throw std::out_of_range("RoadState: cell index out of range");
}

double RoadState::evaluate(int cell, double xi) const {
  check_cell(cell);
  double v = 0.0;
  for (int l = 0; l <= degree_; ++l) v += mode(cell, l) * basis_value(l, xi);
  return v;
}

double RoadState::evaluate_at(double x) const {
  const int j = mesh_.locate(x);
  const double xi = (x - mesh_.center(j)) / (0.5 * mesh_.width(j));
  return evaluate(j, std::clamp(xi, -1.0, 1.0));
}

double RoadState::trace_left(int cell) const { return evaluate(cell, -1.0); }

double RoadState::trace_right(int cell) const { return evaluate(cell, 1.0); }

RoadState project_initial(const Mesh1D& mesh, int degree, const DensityField& rho0) {
  RoadState state(mesh, degree);
  const auto rule = gauss_legendre(std::max(degree + 2, 6));
  const int nq = static_cast<int>(rule.nodes.size());
  for (int j = 0; j < mesh.n_cells(); ++j) {
    const double xc = mesh.center(j), half = 0.5 * mesh.width(j);
    for (int l = 0; l <= degree; ++l) {
      double acc = 0.0;
      for (int q = 0; q < nq; ++q) {
        const double xi = rule.nodes[q];
        acc += rule.weights[q] * rho0(xc + half * xi) * basis_value(l, xi);
      }
      // (dx/2) * acc over the mass (dx/2) * basis_mass(l): widths cancel.
      state.mode(j, l) = acc / basis_mass(l);
    }
  }
  return state;
}

namespace {

// Basis and quadrature values cached per degree for the residual volume term.
struct VolumeTables {
  int nq = 0;
  std::array<double, 6> nodes{}, weights{};
  std::array<std::array<double, 6>, kMaxDegree + 1> dpsi{};  // [mode][q]
};

const VolumeTables& volume_tables(int degree) {
  static const std::array<VolumeTables, kMaxDegree + 1> tables = [] {
    std::array<VolumeTables, kMaxDegree + 1> t{};
    for (int k = 0; k <= kMaxDegree; ++k) {
      const auto rule = gauss_legendre(k + 2);
      t[k].nq = static_cast<int>(rule.nodes.size());
      for (int q = 0; q < t[k].nq; ++q) {
        t[k].nodes[q] = rule.nodes[q];
        t[k].weights[q] = rule.weights[q];
        for (int l = 0; l <= k; ++l)
          t[k].dpsi[l][q] = basis_derivative(l, rule.nodes[q]);
      }
    }
    return t;
  }();
  return tables[degree];
}

}  // namespace

RoadResidual dg_residual(const RoadState& state, const FluxModel& model,
                         NumericalFlux flux_kind, double flux_left_boundary,
                         double flux_right_boundary) {
  const int n = state.n_cells();
  const int k = state.degree();
  const auto& tab = volume_tables(k);

  // Interface fluxes: index i is the interface left of cell i.
  std::vector<double> fhat(n + 1);
  fhat[0] = flux_left_boundary;
  fhat[n] = flux_right_boundary;
  for (int i = 1; i < n; ++i)
    fhat[i] = model.interface_flux(flux_kind, state.trace_right(i - 1),
                                   state.trace_left(i));

  RoadResidual res;
  res.coeffs.assign(state.coeffs().size(), 0.0);
  for (int j = 0; j < n; ++j) {
    const double dx = state.mesh().width(j);
    std::array<double, 6> fq{};
    if (k > 0) {
      for (int q = 0; q < tab.nq; ++q)
        fq[q] = model.flux(state.evaluate(j, tab.nodes[q]));
    }
    for (int l = 0; l <= k; ++l) {
      double vol = 0.0;
      if (l > 0) {
        for (int q = 0; q < tab.nq; ++q) vol += tab.weights[q] * fq[q] * tab.dpsi[l][q];
      }
      const double boundary =
          fhat[j + 1] * basis_value(l, 1.0) - fhat[j] * basis_value(l, -1.0);
      res.coeffs[static_cast<std::size_t>(j) * (k + 1) + l] =
          (vol - boundary) / (0.5 * dx * basis_mass(l));
    }
  }
  return res;
}

std::vector<SamplePoint> sample_road(const RoadState& state, int samples_per_cell) {
  const int m = std::max(samples_per_cell, 1);
  std::vector<SamplePoint> out;
  out.reserve(static_cast<std::size_t>(state.n_cells()) * m);
  for (int j = 0; j < state.n_cells(); ++j) {
    const double avg = state.average(j);
    for (int i = 0; i < m; ++i) {
      const double xi = m == 1 ? 0.0 : -1.0 + 2.0 * i / (m - 1);
      const double x = state.mesh().center(j) + 0.5 * state.mesh().width(j) * xi;
      out.push_back({x, state.evaluate(j, xi), avg});
    }
  }
  return out;
}

}  // namespace lwrdg
