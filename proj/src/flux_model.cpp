#include "lwrdg/flux_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lwrdg {

FluxModel FluxModel::quadratic(double rho_max, double v_free) {
  if (!(rho_max > 0.0) || !(v_free > 0.0))
    throw std::domain_error("FluxModel::quadratic: rho_max and v_free must be positive");
  FluxModel m;
  m.rho_max_ = rho_max;
  m.v_free_ = v_free;
  m.quadratic_ = true;
  m.sigma_ = 0.5 * rho_max;
  m.lf_alpha_ = v_free;
  m.max_flux_ = 0.25 * v_free * rho_max;
  return m;
}

FluxModel FluxModel::custom(std::function<double(double)> f,
                            std::function<double(double)> f_prime,
                            double rho_max, double sigma, double lf_alpha) {
  if (!(rho_max > 0.0)) throw std::domain_error("FluxModel::custom: rho_max must be positive");
  FluxModel m;
  m.rho_max_ = rho_max;
  m.sigma_ = sigma;
  m.lf_alpha_ = lf_alpha;
  m.f_ = std::move(f);
  m.fp_ = std::move(f_prime);
  m.max_flux_ = m.f_(sigma);
  return m;
}

FluxModel FluxModel::custom(std::function<double(double)> f,
                            std::function<double(double)> f_prime,
                            double rho_max) {
  // Golden-section search for the maximizer of a strictly concave f.
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0, b = rho_max;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-14 * rho_max; ++it) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + phi * (b - a); f2 = f(x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - phi * (b - a); f1 = f(x1);
    }
  }
  const double sigma = 0.5 * (a + b);
  const double alpha = std::max(std::abs(f_prime(0.0)), std::abs(f_prime(rho_max)));
  return custom(std::move(f), std::move(f_prime), rho_max, sigma, alpha);
}

double FluxModel::flux(double rho) const {
  if (quadratic_) return v_free_ * rho * (1.0 - rho / rho_max_);
  return f_(rho);
}

double FluxModel::wave_speed(double rho) const {
  if (quadratic_) return v_free_ * (1.0 - 2.0 * rho / rho_max_);
  return fp_(rho);
}

void FluxModel::require_in_domain(double rho, const char* op) const {
  if (!(rho >= 0.0) || !(rho <= rho_max_))
    throw std::domain_error(std::string(op) + ": density " + std::to_string(rho) +
                            " outside [0, " + std::to_string(rho_max_) + "]");
}

double FluxModel::tau(double rho) const {
  require_in_domain(rho, "tau");
  if (quadratic_) return rho_max_ - rho;
  // Bisect on the branch opposite rho, where f is monotone.
  const double target = flux(rho);
  double lo, hi;
  if (rho <= sigma_) { lo = sigma_; hi = rho_max_; }  // f decreasing here
  else { lo = 0.0; hi = sigma_; }                     // f increasing here
  const bool decreasing = rho <= sigma_;
  for (int it = 0; it < 200 && (hi - lo) > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = flux(mid);
    const bool go_right = decreasing ? (fm > target) : (fm < target);
    if (go_right) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double FluxModel::demand(double rho) const {
  require_in_domain(rho, "demand");
  return rho <= sigma_ ? flux(rho) : max_flux_;
}

double FluxModel::supply(double rho) const {
  require_in_domain(rho, "supply");
  return rho <= sigma_ ? max_flux_ : flux(rho);
}

double FluxModel::lax_friedrichs(double rho_left, double rho_right) const {
  require_in_domain(rho_left, "lax_friedrichs");
  require_in_domain(rho_right, "lax_friedrichs");
  return interface_flux(NumericalFlux::LaxFriedrichs, rho_left, rho_right);
}

double FluxModel::godunov(double rho_left, double rho_right) const {
  require_in_domain(rho_left, "godunov");
  require_in_domain(rho_right, "godunov");
  return godunov_unchecked(rho_left, rho_right);
}

double FluxModel::godunov_unchecked(double rho_left, double rho_right) const {
  // Concavity: the minimum over an interval sits at an endpoint, the maximum
  // at sigma when the interval contains it.
  if (rho_left <= rho_right)
    return std::min(flux(rho_left), flux(rho_right));
  if (rho_right <= sigma_ && sigma_ <= rho_left) return max_flux_;
  return std::max(flux(rho_left), flux(rho_right));
}

double FluxModel::interface_flux(NumericalFlux kind, double rho_left, double rho_right) const {
  if (kind == NumericalFlux::Godunov) return godunov_unchecked(rho_left, rho_right);
  return 0.5 * (flux(rho_left) + flux(rho_right)) +
         0.5 * lf_alpha_ * (rho_left - rho_right);
}

}  // namespace lwrdg
