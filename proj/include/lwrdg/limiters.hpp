#pragma once

#include "lwrdg/dg.hpp"

namespace lwrdg {

struct TvbConfig {
  double m = 0.0;  // threshold constant; slope deviations below m*dx^2 pass through
  bool enabled = true;
};

struct BpConfig {
  double rho_min = 0.0;
  double rho_max = 1.0;
  bool enabled = true;
};

/// Modified minmod: a1 passes through when |a1| <= threshold; otherwise the
/// smallest magnitude wins when all three signs agree, else zero.
double minmod_bar(double a1, double a2, double a3, double threshold);

/// Slope limiter: compares interface deviations against neighbouring
/// cell-average differences and rebuilds the cell polynomial (degree <= 2)
/// from the limited traces when they change. Boundary cells reuse the one
/// available average difference. Cell averages are untouched.
void apply_tvb(RoadState& state, const TvbConfig& cfg);

/// Rescales every mode l >= 1 about the cell average so that the values at
/// the Gauss-Lobatto nodes stay inside [rho_min, rho_max]. Requires cell
/// averages already in bounds (throws integrity_error otherwise).
void apply_bp(RoadState& state, const BpConfig& cfg);

}  // namespace lwrdg
