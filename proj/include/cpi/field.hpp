#pragma once

#include <complex>
#include <vector>

#include "cpi/grid.hpp"

namespace cpi {

using Complex = std::complex<double>;

// Complex scalar field amplitude sampled on a 1-D line grid; one
// stochastic realization on a plane in 1-D mode.
struct Field {
  Grid1D grid;
  std::vector<Complex> values;

  Field() = default;
  explicit Field(const Grid1D& g) : grid(g), values(g.n, Complex{}) {}

  // Riemann-sum power integral sum |E|^2 * step.
  double power() const {
    double p = 0.0;
    for (const Complex& v : values) p += std::norm(v);
    return p * grid.step;
  }
};

// 2-D counterpart; values laid out x-major (index = ix * ny + iy).
struct Field2 {
  Grid2D grid;
  std::vector<Complex> values;

  Field2() = default;
  explicit Field2(const Grid2D& g) : grid(g), values(g.samples(), Complex{}) {}

  Complex& at(int ix, int iy) { return values[ix * grid.y.n + iy]; }
  const Complex& at(int ix, int iy) const {
    return values[ix * grid.y.n + iy];
  }

  double power() const {
    double p = 0.0;
    for (const Complex& v : values) p += std::norm(v);
    return p * grid.x.step * grid.y.step;
  }
};

}  // namespace cpi
