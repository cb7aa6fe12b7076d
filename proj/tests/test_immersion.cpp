#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nks3/immersion.hpp"

using namespace nks3;

namespace {

constexpr Family kAll[] = {Family::kM1, Family::kM2, Family::kM3,
                           Family::kM4, Family::kM5, Family::kM6};

FamilyParams default_params(Family f) {
  return uses_radius(f) ? FamilyParams::radius(0.6) : FamilyParams::torus(0.6, 0.8);
}

double dist(const QuatPair& a, const QuatPair& b) {
  const QuatPair d = a - b;
  return std::sqrt(euclidean_dot(d, d));
}

}  // namespace

TEST(Immersion, FamilyNames) {
  for (Family f : kAll) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_FALSE(parse_family("m7").has_value());
  EXPECT_FALSE(parse_family("M1").has_value());
  EXPECT_TRUE(uses_radius(Family::kM3));
  EXPECT_FALSE(uses_radius(Family::kM5));
}

TEST(Immersion, BasePoints) {
  const ChartCoords zero = ChartCoords::Zero();
  const AmbientPoint a = make_example(Family::kM1, FamilyParams::radius(0.6)).point(zero);
  EXPECT_LE(point_distance(a, {Quaternion::one(), Quaternion{0.8, 0.6, 0, 0}}), 1e-15);

  const AmbientPoint b = make_example(Family::kM4, FamilyParams::torus(0.6, 0.8)).point(zero);
  EXPECT_LE(point_distance(b, {Quaternion::one(), Quaternion{0.6, 0, 0.8, 0}}), 1e-15);

  const AmbientPoint c = make_example(Family::kM2, FamilyParams::radius(0.6)).point(zero);
  EXPECT_LE(point_distance(c, {Quaternion{0.8, 0.6, 0, 0}, Quaternion::one()}), 1e-15);
}

TEST(Immersion, ImageFamiliesAreIsometricImages) {
  Rng rng(8);
  for (Family base : {Family::kM1, Family::kM4}) {
    const FamilyParams p = default_params(base);
    const Immersion m = make_example(base, p);
    const Family second = base == Family::kM1 ? Family::kM2 : Family::kM5;
    const Family third = base == Family::kM1 ? Family::kM3 : Family::kM6;
    for (int s = 0; s < 20; ++s) {
      const ChartCoords u = m.sample_coords(rng);
      const AmbientPoint x = m.point(u);
      EXPECT_LE(point_distance(make_example(second, p).point(u), IsometryMap::F1().apply(x)), 1e-15);
      EXPECT_LE(point_distance(make_example(third, p).point(u), IsometryMap::F2().apply(x)), 1e-15);
    }
  }
}

TEST(Immersion, PushforwardMatchesCentralDifferences) {
  Rng rng(12);
  for (Family f : kAll) {
    const Immersion m = make_example(f, default_params(f));
    for (int s = 0; s < 20; ++s) {
      const ChartCoords u = m.sample_coords(rng);
      const AmbientPoint x = m.point(u);
      ASSERT_TRUE(on_manifold(x, 1e-12));
      const auto exact = m.pushforward(u);
      const auto numeric = m.pushforward_numeric(u);
      for (int a = 0; a < kHypersurfaceDim; ++a) {
        EXPECT_TRUE(is_tangent(x, exact[a], 1e-12)) << family_name(f);
        EXPECT_LE(dist(exact[a], numeric[a]), 1e-8) << family_name(f) << " coord " << a;
      }
    }
  }
}

TEST(Immersion, SampleCoordsStayInRegularRange) {
  Rng rng(4);
  const Immersion m = make_example(Family::kM1, FamilyParams::radius(0.5));
  for (int s = 0; s < 500; ++s) {
    const ChartCoords u = m.sample_coords(rng);
    EXPECT_LE(std::abs(u(1)), 0.6);
    EXPECT_LE(std::abs(u(4)), 1.2);
  }
}

TEST(Immersion, DomainErrors) {
  EXPECT_THROW(make_example(Family::kM1, FamilyParams::radius(0.0)), DomainError);
  EXPECT_THROW(make_example(Family::kM2, FamilyParams::radius(1.01)), DomainError);
  EXPECT_THROW(make_example(Family::kM3, FamilyParams::radius(std::nan(""))), DomainError);
  EXPECT_THROW(make_example(Family::kM4, FamilyParams::torus(0.6, 0.7)), DomainError);
  EXPECT_THROW(make_example(Family::kM5, FamilyParams::torus(1.0, 0.0)), DomainError);
  EXPECT_THROW(make_example(Family::kM6, FamilyParams::torus(-0.6, 0.8)), DomainError);
  EXPECT_NO_THROW(make_example(Family::kM1, FamilyParams::radius(1.0)));
  EXPECT_NO_THROW(
      make_example(Family::kM4, FamilyParams::torus(std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2)));
}
