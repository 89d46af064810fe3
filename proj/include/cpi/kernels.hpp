#pragma once

#include <span>

#include "cpi/field.hpp"
#include "cpi/grid.hpp"

namespace cpi {

// Quadratic phase factor exp(i * curvature * rho^2 / 2); unit modulus.
inline Complex chirp_factor(double rho, double curvature) {
  return std::polar(1.0, 0.5 * curvature * rho * rho);
}

// sum_m base[m] * exp(-i * kappa * pos(m)) * step, evaluated with an
// incremental phase rotor refreshed every 4096 terms to bound drift.
// Every oscillatory quadrature in the library funnels through this one
// routine so that algebraically equal paths agree bit-for-bit.
Complex modulated_sum(std::span<const Complex> base, const Grid1D& g,
                      double kappa);

// base[m] = profile[m] * exp(i * curvature * pos(m)^2 / 2).
std::vector<Complex> chirped_profile(std::span<const double> profile,
                                     const Grid1D& g, double curvature);

// Riemann-sum approximation of the continuous Fourier integral
// integral d rho  profile(rho) exp(-i kappa rho) of a sampled profile.
Complex fourier_profile(std::span<const double> profile, const Grid1D& g,
                        double kappa);

// Paraxial Fresnel propagation of a sampled field over distance > 0 onto
// a destination grid. Total power is conserved within quadrature error on
// adequately padded grids. Throws std::invalid_argument for distance <= 0
// and std::domain_error when the source grid violates the chirp-sampling
// rule for this distance (aliasing risk).
Field fresnel_propagate(const Field& in, double distance, const Wavenumber& wn,
                        const Grid1D& dest);

// Same-grid convenience overload.
Field fresnel_propagate(const Field& in, double distance,
                        const Wavenumber& wn);

// Maximum admissible source-grid step for propagating between grids a
// distance d apart: step < pi * d / (k * (R_src + R_dst)).
double fresnel_step_bound(const Grid1D& src, const Grid1D& dst, double distance,
                          const Wavenumber& wn);

}  // namespace cpi
