#pragma once

#include <vector>

namespace lwrdg {

/// Partition of [x_min, x_max] into cells. Uniform on construction; widths are
/// stored per cell so nonuniform meshes are a data change only.
class Mesh1D {
 public:
  Mesh1D(double x_min, double x_max, int n_cells);

  int n_cells() const { return static_cast<int>(edges_.size()) - 1; }
  double x_min() const { return edges_.front(); }
  double x_max() const { return edges_.back(); }
  double left_edge(int j) const { return edges_[j]; }
  double right_edge(int j) const { return edges_[j + 1]; }
  double width(int j) const { return edges_[j + 1] - edges_[j]; }
  double center(int j) const { return 0.5 * (edges_[j] + edges_[j + 1]); }
  double min_width() const;

  /// Index of the cell containing x (clamped to the boundary cells).
  int locate(double x) const;

 private:
  std::vector<double> edges_;
};

}  // namespace lwrdg
