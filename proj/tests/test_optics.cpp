#include <doctest.h>

#include "eqbeam/equivalence.hpp"
#include "eqbeam/optics.hpp"
#include "test_support.hpp"

using namespace eqbeam;
using namespace eqbeam::testing;

namespace {

const GridSpec kCoarse{3.0, 128};
const GridSpec kFigure{3.0, 512};

// bilinear sample of an image at (x, y)
double sample(const IntensityImage& image, double x, double y) {
  const GridSpec& g = image.spec;
  const double fx = (x + g.extent) / g.pixel_size() - 0.5;
  const double fy = (y + g.extent) / g.pixel_size() - 0.5;
  const int ix = static_cast<int>(std::floor(fx));
  const int iy = static_cast<int>(std::floor(fy));
  if (ix < 0 || iy < 0 || ix + 1 >= g.resolution || iy + 1 >= g.resolution)
    return 0.0;
  const double ax = fx - ix, ay = fy - iy;
  return (1 - ax) * (1 - ay) * image.values(iy, ix) +
         ax * (1 - ay) * image.values(iy, ix + 1) +
         (1 - ax) * ay * image.values(iy + 1, ix) +
         ax * ay * image.values(iy + 1, ix + 1);
}

}  // namespace

TEST_CASE("LG modes are unit power and orthogonal on the grid") {
  const GridSpec grid{4.0, 256};
  for (int l : {0, 1, -1, 2}) {
    const FieldGrid u = lg_field({0, l, 1.0}, grid);
    CHECK(u.power() == doctest::Approx(1.0).epsilon(1e-3));
  }
  const FieldGrid p1 = lg_field({1, 0, 1.0}, grid);  // radial index 1
  CHECK(p1.power() == doctest::Approx(1.0).epsilon(1e-3));

  const FieldGrid u00 = lg_field({0, 0, 1.0}, grid);
  const FieldGrid u01 = lg_field({0, 1, 1.0}, grid);
  const Complex overlap =
      (u00.values.conjugate().cwiseProduct(u01.values)).sum() *
      grid.pixel_area();
  CHECK(std::abs(overlap) < 1e-3);
  const Complex overlap_radial =
      (u00.values.conjugate().cwiseProduct(p1.values)).sum() *
      grid.pixel_area();
  CHECK(std::abs(overlap_radial) < 1e-3);
}

TEST_CASE("fundamental mode peaks at 2/(pi w^2) on axis") {
  CHECK(std::norm(lg_amplitude({0, 0, 1.0}, 0.0, 0.0)) ==
        doctest::Approx(2.0 / kPi).epsilon(1e-12));
  // vortex null at the origin
  CHECK(std::abs(lg_amplitude({0, 1, 1.0}, 0.0, 0.0)) < 1e-14);
  CHECK(std::abs(lg_amplitude({0, -2, 1.0}, 0.0, 0.0)) < 1e-14);
}

TEST_CASE("superpose") {
  const std::vector<LGModeSpec> basis = {{0, -1, 1.0}, {0, 0, 1.0}, {0, 1, 1.0}};

  SUBCASE("unit coefficient picks out the mode") {
    Vector c(3);
    c << 0, 0, 1;
    const FieldGrid field = superpose(c, basis, kCoarse);
    const FieldGrid direct = lg_field({0, 1, 1.0}, kCoarse);
    CHECK((field.values - direct.values).norm() < 1e-12);
  }

  SUBCASE("unit-norm coefficients preserve power") {
    const SU2Frame f = make_generators(SpinLabel(2));
    const Vector c = coherent_state(f, kPi / 2, 0.0);
    const FieldGrid field = superpose(c, basis, GridSpec{4.0, 256});
    CHECK(field.power() == doctest::Approx(1.0).epsilon(1e-3));
  }

  SUBCASE("length mismatch throws") {
    Vector c(2);
    c << 1, 0;
    CHECK_THROWS_AS(superpose(c, basis, kCoarse), LengthMismatchError);
  }
}

TEST_CASE("coherent beam intensity") {
  SUBCASE("theta=0 is the rotationally symmetric LG ring") {
    const IntensityImage image =
        coherent_beam_intensity(SpinLabel(2), 0.0, 0.0, kCoarse);
    const IntensityImage ring = {
        kCoarse, lg_field({0, 1, 1.0}, kCoarse).values.cwiseAbs2()};
    CHECK((image.values - ring.values).norm() < 1e-12);
  }

  SUBCASE("total power is independent of the pointing angles") {
    const GridSpec grid{4.0, 256};
    const double p0 =
        coherent_beam_intensity(SpinLabel(2), 0.3, 0.0, grid).total();
    for (double theta : {0.0, kPi / 3, kPi / 2})
      for (double phi : {0.0, 1.0})
        CHECK(coherent_beam_intensity(SpinLabel(2), theta, phi, grid).total() ==
              doctest::Approx(p0).epsilon(1e-3));
  }

  SUBCASE("phi advance rotates the transverse pattern rigidly") {
    const double delta = 0.4;
    const IntensityImage base =
        coherent_beam_intensity(SpinLabel(2), kPi / 3, 0.7, kFigure);
    const IntensityImage rotated =
        coherent_beam_intensity(SpinLabel(2), kPi / 3, 0.7 + delta, kFigure);
    // compare rotated(x, y) with base at the -delta rotated point
    double worst = 0.0;
    for (double r : {0.5, 1.0, 1.5})
      for (int k = 0; k < 12; ++k) {
        const double ang = 2 * kPi * k / 12;
        const double x = r * std::cos(ang), y = r * std::sin(ang);
        const double xr = r * std::cos(ang - delta), yr = r * std::sin(ang - delta);
        worst = std::max(worst, std::abs(sample(rotated, x, y) -
                                         sample(base, xr, yr)));
      }
    CHECK(worst < 5e-3);  // bilinear interpolation tolerance
  }

  SUBCASE("half-integer T has no LG basis") {
    CHECK_THROWS_AS(coherent_beam_intensity(SpinLabel(1), 0.0, 0.0, kCoarse),
                    OutOfRangeError);
  }
}

TEST_CASE("mixed beam intensity") {
  const std::vector<LGModeSpec> basis = {{0, -1, 1.0}, {0, 0, 1.0}, {0, 1, 1.0}};

  SUBCASE("pure matrix reproduces the coherent intensity") {
    const SU2Frame f = make_generators(SpinLabel(2));
    const Vector c = coherent_state(f, 0.9, 0.4);
    const ModeMatrix pure(Matrix(c * c.adjoint()));
    const IntensityImage mixed = mixed_beam_intensity(pure, basis, kCoarse);
    const IntensityImage coherent =
        coherent_beam_intensity(SpinLabel(2), 0.9, 0.4, kCoarse);
    CHECK((mixed.values - coherent.values).cwiseAbs().maxCoeff() < 1e-10);
  }

  SUBCASE("equivalent state of p=e3 mixes eigenmodes with weights 0,1/3,2/3") {
    const ModeMatrix m = equivalent_state(BlochVector(0, 0, 1), SpinLabel(2));
    const IntensityImage image = mixed_beam_intensity(m, basis, kCoarse);
    Eigen::MatrixXd expected =
        (1.0 / 3) * lg_field(basis[1], kCoarse).values.cwiseAbs2() +
        (2.0 / 3) * lg_field(basis[2], kCoarse).values.cwiseAbs2();
    CHECK((image.values - expected).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("maximally mixed is the equal-weight sum of mode rings") {
    const ModeMatrix m(Matrix::Identity(3, 3) / 3.0);
    const IntensityImage image = mixed_beam_intensity(m, basis, kCoarse);
    Eigen::MatrixXd expected =
        Eigen::MatrixXd::Zero(kCoarse.resolution, kCoarse.resolution);
    for (const auto& mode : basis)
      expected += lg_field(mode, kCoarse).values.cwiseAbs2() / 3.0;
    CHECK((image.values - expected).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("dimension mismatch throws") {
    const ModeMatrix m(Matrix::Identity(2, 2) / 2.0);
    CHECK_THROWS_AS(mixed_beam_intensity(m, basis, kCoarse),
                    DimensionMismatchError);
  }
}

TEST_CASE("i_diff maps") {
  SUBCASE("alpha=0 vanishes identically") {
    const IntensityImage image = i_diff(0.0, kPi / 3, kCoarse);
    CHECK(image.peak_abs() < 1e-14);
  }

  SUBCASE("theta=0 peaks at alpha/pi on axis") {
    const IntensityImage image = i_diff(0.3, 0.0, kFigure);
    CHECK(image.peak_abs() == doctest::Approx(0.3 / kPi).epsilon(1e-3));
  }

  SUBCASE("reference peak scales at the default grid") {
    CHECK(i_diff(0.2, 0.0, kFigure).peak_abs() ==
          doctest::Approx(0.0637).epsilon(0.01));
    CHECK(i_diff(0.4, 0.0, kFigure).peak_abs() ==
          doctest::Approx(0.1273).epsilon(0.01));
  }

  SUBCASE("plane integral vanishes") {
    for (double alpha : {0.2, 0.9})
      for (double theta : {0.0, kPi / 4, kPi})
        CHECK(std::abs(i_diff(alpha, theta, kFigure).total()) < 1e-3);
  }

  SUBCASE("peak is exactly linear in alpha on a fixed grid") {
    const double theta = kPi / 4;
    const double p02 = i_diff(0.2, theta, kCoarse).peak_abs();
    const double p04 = i_diff(0.4, theta, kCoarse).peak_abs();
    CHECK(p02 / p04 == doctest::Approx(0.5).epsilon(1e-6));
  }

  SUBCASE("profile shape does not depend on alpha") {
    const double theta = 3 * kPi / 4;
    const IntensityImage a = i_diff(0.2, theta, kCoarse);
    const IntensityImage b = i_diff(0.9, theta, kCoarse);
    Eigen::Index ra, ca, rb, cb;
    a.values.cwiseAbs().maxCoeff(&ra, &ca);
    b.values.cwiseAbs().maxCoeff(&rb, &cb);
    CHECK(ra == rb);
    CHECK(ca == cb);
    // the whole map is a rescaling: b = (0.9/0.2) a
    CHECK((b.values - 4.5 * a.values).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("alpha out of range throws") {
    CHECK_THROWS_AS(i_diff(-0.1, 0.0, kCoarse), OutOfRangeError);
    CHECK_THROWS_AS(i_diff(1.1, 0.0, kCoarse), OutOfRangeError);
  }
}
