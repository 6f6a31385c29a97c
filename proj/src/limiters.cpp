#include "lwrdg/limiters.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lwrdg/errors.hpp"
#include "lwrdg/quadrature.hpp"

namespace lwrdg {

double minmod_bar(double a1, double a2, double a3, double threshold) {
  if (std::abs(a1) <= threshold) return a1;
  const double s1 = a1 > 0 ? 1.0 : (a1 < 0 ? -1.0 : 0.0);
  const double s2 = a2 > 0 ? 1.0 : (a2 < 0 ? -1.0 : 0.0);
  const double s3 = a3 > 0 ? 1.0 : (a3 < 0 ? -1.0 : 0.0);
  if (s1 != 0.0 && s1 == s2 && s2 == s3)
    return s1 * std::min({std::abs(a1), std::abs(a2), std::abs(a3)});
  return 0.0;
}

void apply_tvb(RoadState& state, const TvbConfig& cfg) {
  const int k = state.degree();
  if (!cfg.enabled || k == 0) return;
  const int n = state.n_cells();
  if (n < 2) return;  // no neighbour differences to compare against

  // Averages are never modified below, so reading them live is safe.
  for (int j = 0; j < n; ++j) {
    const double avg = state.average(j);
    const double up = state.trace_right(j) - avg;
    const double down = avg - state.trace_left(j);
    // Boundary cells duplicate the one available neighbour difference.
    const double dplus = j + 1 < n ? state.average(j + 1) - avg : avg - state.average(j - 1);
    const double dminus = j > 0 ? avg - state.average(j - 1) : dplus;
    const double dx = state.mesh().width(j);
    const double threshold = cfg.m * dx * dx;
    const double up_mod = minmod_bar(up, dplus, dminus, threshold);
    const double down_mod = minmod_bar(down, dplus, dminus, threshold);
    if (std::abs(up_mod - up) <= 1e-14 && std::abs(down_mod - down) <= 1e-14) continue;

    // Rebuild the unique polynomial of degree <= 2 with this average and the
    // limited traces; higher modes are dropped.
    state.mode(j, 1) = 0.5 * (up_mod + down_mod);
    if (k >= 2) state.mode(j, 2) = 0.75 * (up_mod - down_mod);
    if (k >= 3) state.mode(j, 3) = 0.0;
  }
}

void apply_bp(RoadState& state, const BpConfig& cfg) {
  const int k = state.degree();
  if (!cfg.enabled || k == 0) return;
  const auto rule = gauss_lobatto(lobatto_points_for_degree(k));
  const int nq = static_cast<int>(rule.nodes.size());
  for (int j = 0; j < state.n_cells(); ++j) {
    const double avg = state.average(j);
    if (avg < cfg.rho_min - 1e-11 || avg > cfg.rho_max + 1e-11)
      throw integrity_error("apply_bp: cell " + std::to_string(j) + " average " +
                            std::to_string(avg) + " outside [" +
                            std::to_string(cfg.rho_min) + ", " +
                            std::to_string(cfg.rho_max) + "]; time step too large");
    double vmax = avg, vmin = avg;
    for (int q = 0; q < nq; ++q) {
      const double v = state.evaluate(j, rule.nodes[q]);
      vmax = std::max(vmax, v);
      vmin = std::min(vmin, v);
    }
    auto ratio = [&](double bound, double extreme) {
      const double denom = extreme - avg;
      if (denom == 0.0) return 1.0;
      return std::abs((bound - avg) / denom);
    };
    const double theta =
        std::min({ratio(cfg.rho_max, vmax), ratio(cfg.rho_min, vmin), 1.0});
    if (theta >= 1.0) continue;
    for (int l = 1; l <= k; ++l) state.mode(j, l) *= theta;
  }
}

}  // namespace lwrdg
