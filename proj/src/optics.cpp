#include "eqbeam/optics.hpp"

#include <cmath>

#include "eqbeam/su2.hpp"

namespace eqbeam {

namespace {

constexpr double kPi = 3.14159265358979323846;

// L_p^a(x) by the stable three-term recurrence.
double assoc_laguerre(int p, int a, double x) {
  if (p == 0) return 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 + a - x;
  for (int k = 1; k < p; ++k) {
    const double lkp1 = ((2 * k + 1 + a - x) * lk - (k + a) * lkm1) / (k + 1);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

Complex lg_amplitude(const LGModeSpec& mode, double x, double y) {
  const double w = mode.waist;
  const int al = std::abs(mode.azimuthal);
  const double r2 = x * x + y * y;
  const double norm = std::sqrt(
      2.0 / kPi * std::exp(log_factorial(mode.radial) -
                           log_factorial(mode.radial + al))) /
      w;
  const double radial = norm *
      std::pow(std::sqrt(2.0 * r2) / w, al) *
      assoc_laguerre(mode.radial, al, 2.0 * r2 / (w * w)) *
      std::exp(-r2 / (w * w));
  const double phi = std::atan2(y, x);
  return radial * std::exp(Complex(0, mode.azimuthal * phi));
}

FieldGrid lg_field(const LGModeSpec& mode, const GridSpec& grid) {
  if (mode.radial < 0) throw OutOfRangeError("lg_field: radial index must be >= 0");
  if (mode.waist <= 0.0) throw OutOfRangeError("lg_field: waist must be positive");
  if (grid.resolution < 2) throw OutOfRangeError("lg_field: resolution must be >= 2");

  FieldGrid out{grid, Eigen::MatrixXcd(grid.resolution, grid.resolution)};
  for (int iy = 0; iy < grid.resolution; ++iy) {
    const double y = grid.coordinate(iy);
    for (int ix = 0; ix < grid.resolution; ++ix)
      out.values(iy, ix) = lg_amplitude(mode, grid.coordinate(ix), y);
  }
  return out;
}

FieldGrid superpose(const Vector& coefficients,
                    const std::vector<LGModeSpec>& basis,
                    const GridSpec& grid) {
  if (static_cast<std::size_t>(coefficients.size()) != basis.size())
    throw LengthMismatchError("superpose: coefficient/basis length mismatch");

  FieldGrid out{grid,
                Eigen::MatrixXcd::Zero(grid.resolution, grid.resolution)};
  for (std::size_t k = 0; k < basis.size(); ++k)
    out.values += coefficients[static_cast<Eigen::Index>(k)] *
                  lg_field(basis[k], grid).values;
  return out;
}

IntensityImage coherent_beam_intensity(SpinLabel t, double theta, double phi,
                                       const GridSpec& grid) {
  if (!t.is_integer())
    throw OutOfRangeError(
        "coherent_beam_intensity: the LG_{0,-T..+T} basis needs integer T");

  std::vector<LGModeSpec> basis;
  const int tv = t.twice() / 2;
  for (int l = -tv; l <= tv; ++l) basis.push_back({0, l, 1.0});

  const SU2Frame frame = make_generators(t);
  const Vector coeff = coherent_state(frame, theta, phi);
  const FieldGrid field = superpose(coeff, basis, grid);
  return {grid, field.values.cwiseAbs2()};
}

IntensityImage mixed_beam_intensity(const ModeMatrix& m,
                                    const std::vector<LGModeSpec>& basis,
                                    const GridSpec& grid) {
  if (static_cast<std::size_t>(m.dim()) != basis.size())
    throw DimensionMismatchError(
        "mixed_beam_intensity: matrix dimension differs from basis size");

  Eigen::SelfAdjointEigenSolver<Matrix> es(m.mat());
  IntensityImage out{grid,
                     Eigen::MatrixXd::Zero(grid.resolution, grid.resolution)};
  for (int k = 0; k < m.dim(); ++k) {
    const double lambda = es.eigenvalues()[k];
    if (lambda <= 0.0) continue;
    const FieldGrid field = superpose(es.eigenvectors().col(k), basis, grid);
    out.values += lambda * field.values.cwiseAbs2();
  }
  return out;
}

IntensityImage i_diff(double alpha, double theta, const GridSpec& grid) {
  if (alpha < 0.0 || alpha > 1.0)
    throw OutOfRangeError("i_diff: alpha must lie in [0, 1]");

  const FieldGrid u00 = lg_field({0, 0, 1.0}, grid);
  const FieldGrid u01 = lg_field({0, 1, 1.0}, grid);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);

  const Eigen::MatrixXd bright =
      (c * u00.values + s * u01.values).cwiseAbs2();
  const Eigen::MatrixXd dark =
      (-s * u00.values + c * u01.values).cwiseAbs2();
  const Eigen::MatrixXd background =
      0.5 * (u00.values.cwiseAbs2() + u01.values.cwiseAbs2());

  return {grid, 0.5 * (1 + alpha) * bright + 0.5 * (1 - alpha) * dark -
                    background};
}

}  // namespace eqbeam
