#pragma once

#include <functional>

namespace lwrdg {

enum class NumericalFlux { LaxFriedrichs, Godunov };

/// Concave fundamental diagram: flux f on [0, rho_max] with f(0) = f(rho_max) = 0
/// and a unique maximizer sigma (the critical density). Immutable after
/// construction; safe for shared concurrent reads.
class FluxModel {
 public:
  // f(rho) = v_free * rho * (1 - rho / rho_max).
  static FluxModel quadratic(double rho_max, double v_free);

  // General strictly concave flux; sigma and the wave-speed bound are trusted.
  static FluxModel custom(std::function<double(double)> f,
                          std::function<double(double)> f_prime,
                          double rho_max, double sigma, double lf_alpha);

  // As above, locating sigma by golden-section search; |f'| is maximal at the
  // interval endpoints for a concave flux, which fixes the wave-speed bound.
  static FluxModel custom(std::function<double(double)> f,
                          std::function<double(double)> f_prime,
                          double rho_max);

  double rho_max() const { return rho_max_; }
  double sigma() const { return sigma_; }
  double lf_alpha() const { return lf_alpha_; }
  double max_flux() const { return max_flux_; }  // f(sigma)

  // f and f'; evaluable for any real argument (DG traces may overshoot the
  // physical range before limiting).
  double flux(double rho) const;
  double wave_speed(double rho) const;

  /// Companion density with the same flux on the other side of sigma.
  double tau(double rho) const;

  /// Largest flux an upstream state rho can send through an interface.
  double demand(double rho) const;

  /// Largest flux a downstream state rho can absorb.
  double supply(double rho) const;

  double lax_friedrichs(double rho_left, double rho_right) const;
  double godunov(double rho_left, double rho_right) const;

  // Scheme-internal interface flux: no domain validation.
  double interface_flux(NumericalFlux kind, double rho_left, double rho_right) const;

 private:
  FluxModel() = default;
  void require_in_domain(double rho, const char* op) const;
  double godunov_unchecked(double rho_left, double rho_right) const;

  double rho_max_ = 1.0;
  double sigma_ = 0.5;
  double lf_alpha_ = 1.0;
  double max_flux_ = 0.25;
  bool quadratic_ = false;
  double v_free_ = 1.0;
  std::function<double(double)> f_;
  std::function<double(double)> fp_;
};

}  // namespace lwrdg
