#include "ved/spinfit.hpp"

#include <algorithm>
#include <cmath>

namespace ved {

std::array<double, 4> spin_spectrum(double f_xx, double f_zz, double c) {
  // two-qubit spectrum of f_xx (t1x t2x + t1y t2y) + f_zz t1z t2z + c:
  // the aligned doublet at c + f_zz/4, the split pair at c - f_zz/4.
  std::array<double, 4> levels = {
      c - 0.25 * f_zz - 0.5 * std::abs(f_xx),
      c - 0.25 * f_zz + 0.5 * std::abs(f_xx),
      c + 0.25 * f_zz,
      c + 0.25 * f_zz,
  };
  std::sort(levels.begin(), levels.end());
  return levels;
}

SpinFit fit_spin_model(std::span<const double, 4> levels,
                       double structure_tol) {
  // Exact least squares for the assignment (l0, l1) = split pair,
  // (l2, l3) = doublet: the pair centers are fit independently, so
  //   f_xx = l1 - l0, c - f_zz/4 = (l0+l1)/2, c + f_zz/4 = (l2+l3)/2,
  // and the only misfit left is the doublet splitting.
  const double a = 0.5 * (levels[0] + levels[1]);
  const double b = 0.5 * (levels[2] + levels[3]);
  SpinFit fit;
  fit.f_xx_abs = levels[1] - levels[0];
  fit.f_zz = 2.0 * (b - a);
  fit.c = 0.5 * (a + b);
  fit.residual = std::abs(levels[3] - levels[2]) / (2.0 * std::sqrt(2.0));
  fit.structure_ok = std::abs(levels[3] - levels[2]) <= structure_tol;
  return fit;
}

nlohmann::json to_json(const SpinFit& fit) {
  return nlohmann::json{{"f_xx_abs", fit.f_xx_abs},
                        {"f_zz", fit.f_zz},
                        {"c", fit.c},
                        {"residual", fit.residual},
                        {"structure_ok", fit.structure_ok},
                        {"ground_is_symmetric", fit.ground_is_symmetric}};
}

}  // namespace ved
