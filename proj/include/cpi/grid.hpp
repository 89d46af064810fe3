#pragma once

#include <cmath>
#include <stdexcept>

namespace cpi {

inline constexpr double kPi = 3.14159265358979323846;

// Uniform sampling lattice of one transverse axis.
// Sample i sits at center + (i - (n-1)/2) * step.
struct Grid1D {
  int n = 0;
  double step = 0.0;
  double center = 0.0;

  double pos(int i) const { return center + (i - 0.5 * (n - 1)) * step; }
  double extent() const { return n * step; }

  // Largest |coordinate| of any sample; the R in the chirp-sampling rule.
  double max_abs() const {
    return std::max(std::abs(pos(0)), std::abs(pos(n - 1)));
  }

  // Continuous coordinate -> fractional sample index.
  double index_of(double x) const { return (x - pos(0)) / step; }

  bool valid() const {
    return n >= 2 && step > 0.0 && std::isfinite(step) &&
           std::isfinite(center);
  }
};

inline Grid1D make_grid(int n, double step, double center = 0.0) {
  Grid1D g{n, step, center};
  if (!g.valid())
    throw std::invalid_argument("Grid1D: need n >= 2 and step > 0");
  return g;
}

struct Grid2D {
  Grid1D x;
  Grid1D y;

  long samples() const { return static_cast<long>(x.n) * y.n; }
  bool valid() const { return x.valid() && y.valid(); }
};

// Wavelength and the derived angular wavenumber k = 2*pi/lambda,
// equal to omega/c for light.
struct Wavenumber {
  double lambda = 0.0;
  double k = 0.0;
};

inline Wavenumber make_wavenumber(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("Wavenumber: lambda must be positive");
  return {lambda, 2.0 * kPi / lambda};
}

}  // namespace cpi
