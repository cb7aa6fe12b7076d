#pragma once

// Parametrized hypersurfaces M^5 -> S^3 x S^3: the example families.
//
//   m1(r):   (x, sqrt(1-r^2) + r y),  x in S^3, y in S^2 subset Im H
//   m4(k,l): (x, k cos t1 + k sin t1 i + l cos t2 j + l sin t2 k)
//   m2 = F1 o m1, m3 = F2 o m1, m5 = F1 o m4, m6 = F2 o m4.
//
// Chart on the S^3 factor: x(u0,u1,u2) = exp(u0 i) exp(u1 j) exp(u2 k),
// regular for |u1| < pi/4. Chart on the S^2 factor (m1..m3):
// y(u3,u4) = cos u4 (cos u3 i + sin u3 j) + sin u4 k, regular for |u4| < pi/2.
// For m4..m6, (u3, u4) are the two torus angles.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "nks3/isometry.hpp"
#include "nks3/pointwise.hpp"

namespace nks3 {

class DegenerateImmersion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { kM1, kM2, kM3, kM4, kM5, kM6 };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view s);

// m1..m3 use the radius r; m4..m6 use the torus radii (k, l).
bool uses_radius(Family f);

struct FamilyParams {
  double r = 1.0;
  double k = 0.0;
  double l = 0.0;

  static FamilyParams radius(double r) { return {r, 0.0, 0.0}; }
  static FamilyParams torus(double k, double l) { return {0.0, k, l}; }
};

inline constexpr int kHypersurfaceDim = 5;
using ChartCoords = Eigen::Matrix<double, kHypersurfaceDim, 1>;

class Immersion {
 public:
  Family family() const { return family_; }
  const FamilyParams& params() const { return params_; }

  AmbientPoint point(const ChartCoords& u) const;

  // Exact d f(d/du_a), a = 0..4.
  std::array<TangentVector, kHypersurfaceDim> pushforward(const ChartCoords& u) const;

  // Central-difference pushforward of the point map.
  std::array<TangentVector, kHypersurfaceDim> pushforward_numeric(const ChartCoords& u,
                                                                  double step = 1e-6) const;

  // Random coordinates inside the regular part of the chart.
  ChartCoords sample_coords(Rng& rng) const;

 private:
  friend Immersion make_example(Family family, const FamilyParams& params);
  Immersion(Family f, const FamilyParams& p) : family_{f}, params_{p} {}

  // Point and pushforward of the underlying m1 or m4 map.
  AmbientPoint base_point(const ChartCoords& u) const;
  std::array<TangentVector, kHypersurfaceDim> base_pushforward(const ChartCoords& u) const;
  std::optional<IsometryMap> outer_map() const;

  Family family_;
  FamilyParams params_;
};

// Throws DomainError when r is outside (0, 1], or when k, l are outside
// (0, 1) or k^2 + l^2 differs from 1 by more than 1e-12.
Immersion make_example(Family family, const FamilyParams& params);

}  // namespace nks3
