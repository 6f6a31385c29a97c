#include "lwrdg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lwrdg {

Mesh1D::Mesh1D(double x_min, double x_max, int n_cells) {
  if (!(x_max > x_min)) throw std::invalid_argument("Mesh1D: x_max must exceed x_min");
  if (n_cells < 1) throw std::invalid_argument("Mesh1D: need at least one cell");
  edges_.resize(n_cells + 1);
  const double h = (x_max - x_min) / n_cells;
  for (int i = 0; i <= n_cells; ++i) edges_[i] = x_min + i * h;
  edges_.back() = x_max;
}

double Mesh1D::min_width() const {
  double w = width(0);
  for (int j = 1; j < n_cells(); ++j) w = std::min(w, width(j));
  return w;
}

int Mesh1D::locate(double x) const {
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  const int j = static_cast<int>(it - edges_.begin()) - 1;
  return std::clamp(j, 0, n_cells() - 1);
}

}  // namespace lwrdg
