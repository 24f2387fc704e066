#pragma once

#include <vector>

#include "eqbeam/mode_matrix.hpp"
#include "eqbeam/types.hpp"

namespace eqbeam {

/// Laguerre-Gauss mode at the waist plane: radial index p >= 0, signed
/// azimuthal index l, waist w in the length unit of the grid.
struct LGModeSpec {
  int radial = 0;
  int azimuthal = 0;
  double waist = 1.0;
};

/// Square sampling grid in the transverse plane; extent is the half-width,
/// pixel centers are symmetric about the origin.
struct GridSpec {
  double extent = 3.0;
  int resolution = 512;

  double pixel_size() const { return 2.0 * extent / resolution; }
  double pixel_area() const { return pixel_size() * pixel_size(); }
  /// Center coordinate of pixel index i along either axis.
  double coordinate(int i) const {
    return -extent + (i + 0.5) * pixel_size();
  }
};

struct FieldGrid {
  GridSpec spec;
  Eigen::MatrixXcd values;  // (row, col) = (y index, x index)

  double power() const { return values.squaredNorm() * spec.pixel_area(); }
};

struct IntensityImage {
  GridSpec spec;
  Eigen::MatrixXd values;

  double total() const { return values.sum() * spec.pixel_area(); }
  double peak_abs() const { return values.cwiseAbs().maxCoeff(); }
};

/// Unit-power waist-plane LG mode sampled on the grid.
FieldGrid lg_field(const LGModeSpec& mode, const GridSpec& grid);

/// Pointwise linear combination sum_k c_k u_k of mode fields.
FieldGrid superpose(const Vector& coefficients,
                    const std::vector<LGModeSpec>& basis,
                    const GridSpec& grid);

/// |sum_l c_l(theta, phi) LG_{0l}|^2 for the coherent-state coefficients
/// over the basis LG_{0,-T..+T}; requires integer T.
IntensityImage coherent_beam_intensity(SpinLabel t, double theta, double phi,
                                       const GridSpec& grid);

/// Incoherent eigen-mixture sum_k lambda_k |field of eigenvector k|^2.
IntensityImage mixed_beam_intensity(const ModeMatrix& m,
                                    const std::vector<LGModeSpec>& basis,
                                    const GridSpec& grid);

/// Intensity difference against the fully mixed background over the
/// {LG_00, LG_01} subspace:
///   (1+alpha)/2 |cos(theta/2) u00 + sin(theta/2) u01|^2
/// + (1-alpha)/2 |-sin(theta/2) u00 + cos(theta/2) u01|^2
/// - (|u00|^2 + |u01|^2)/2.
IntensityImage i_diff(double alpha, double theta, const GridSpec& grid);

/// Waist-plane LG amplitude at a single point.
Complex lg_amplitude(const LGModeSpec& mode, double x, double y);

}  // namespace eqbeam
