#include "cpi/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace cpi {

Complex modulated_sum(std::span<const Complex> base, const Grid1D& g,
                      double kappa) {
  Complex rot = std::polar(1.0, -kappa * g.step);
  Complex ph = std::polar(1.0, -kappa * g.pos(0));
  Complex acc{0.0, 0.0};
  const int n = static_cast<int>(base.size());
  for (int m = 0; m < n; ++m) {
    acc += base[m] * ph;
    if ((m & 4095) == 4095)
      ph = std::polar(1.0, -kappa * g.pos(m + 1));
    else
      ph *= rot;
  }
  return acc * g.step;
}

std::vector<Complex> chirped_profile(std::span<const double> profile,
                                     const Grid1D& g, double curvature) {
  std::vector<Complex> base(profile.size());
  for (size_t m = 0; m < profile.size(); ++m)
    base[m] = profile[m] * chirp_factor(g.pos(static_cast<int>(m)), curvature);
  return base;
}

Complex fourier_profile(std::span<const double> profile, const Grid1D& g,
                        double kappa) {
  if (static_cast<int>(profile.size()) != g.n)
    throw std::invalid_argument("fourier_profile: profile/grid size mismatch");
  std::vector<Complex> base = chirped_profile(profile, g, 0.0);
  return modulated_sum(base, g, kappa);
}

double fresnel_step_bound(const Grid1D& src, const Grid1D& dst,
                          double distance, const Wavenumber& wn) {
  const double reach = src.max_abs() + dst.max_abs();
  if (reach <= 0.0) return src.step * 2.0;
  return kPi * distance / (wn.k * reach);
}

Field fresnel_propagate(const Field& in, double distance, const Wavenumber& wn,
                        const Grid1D& dest) {
  if (!(distance > 0.0))
    throw std::invalid_argument("fresnel_propagate: distance must be > 0");
  if (static_cast<int>(in.values.size()) != in.grid.n)
    throw std::invalid_argument("fresnel_propagate: field/grid mismatch");
  const double bound = fresnel_step_bound(in.grid, dest, distance, wn);
  if (in.grid.step >= bound)
    throw std::domain_error(
        "fresnel_propagate: source step violates the chirp-sampling rule "
        "(aliasing risk)");

  const double kd = wn.k / distance;
  std::vector<Complex> base(in.grid.n);
  for (int m = 0; m < in.grid.n; ++m)
    base[m] = in.values[m] * chirp_factor(in.grid.pos(m), kd);

  // kernel prefactor e^{ikd} e^{-i pi/4} / sqrt(lambda d), 1-D form
  const Complex pref =
      std::polar(1.0 / std::sqrt(wn.lambda * distance),
                 wn.k * distance - 0.25 * kPi);

  Field out(dest);
  for (int i = 0; i < dest.n; ++i) {
    const double x = dest.pos(i);
    out.values[i] = pref * chirp_factor(x, kd) *
                    modulated_sum(base, in.grid, kd * x);
  }
  return out;
}

Field fresnel_propagate(const Field& in, double distance,
                        const Wavenumber& wn) {
  return fresnel_propagate(in, distance, wn, in.grid);
}

}  // namespace cpi
