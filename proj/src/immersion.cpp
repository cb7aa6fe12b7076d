#include "nks3/immersion.hpp"

#include <cmath>
#include <numbers>

namespace nks3 {

namespace {

struct S3Chart {
  Quaternion x;
  std::array<Quaternion, 3> dx;
};

S3Chart s3_chart(double u0, double u1, double u2) {
  const Quaternion a = exp_imaginary(Quaternion::i() * u0);
  const Quaternion b = exp_imaginary(Quaternion::j() * u1);
  const Quaternion c = exp_imaginary(Quaternion::k() * u2);
  const Quaternion bc = b * c;
  const Quaternion ab = a * b;
  return {a * bc, {Quaternion::i() * a * bc, a * Quaternion::j() * bc, ab * c * Quaternion::k()}};
}

struct S2Chart {
  Quaternion y;
  std::array<Quaternion, 2> dy;
};

S2Chart s2_chart(double u3, double u4) {
  const double c3 = std::cos(u3), s3 = std::sin(u3);
  const double c4 = std::cos(u4), s4 = std::sin(u4);
  return {{0.0, c4 * c3, c4 * s3, s4},
          {Quaternion{0.0, -c4 * s3, c4 * c3, 0.0}, Quaternion{0.0, -s4 * c3, -s4 * s3, c4}}};
}

Family base_family(Family f) {
  switch (f) {
    case Family::kM1:
    case Family::kM2:
    case Family::kM3:
      return Family::kM1;
    default:
      return Family::kM4;
  }
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kM1: return "m1";
    case Family::kM2: return "m2";
    case Family::kM3: return "m3";
    case Family::kM4: return "m4";
    case Family::kM5: return "m5";
    case Family::kM6: return "m6";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  for (Family f : {Family::kM1, Family::kM2, Family::kM3, Family::kM4, Family::kM5, Family::kM6}) {
    if (family_name(f) == s) return f;
  }
  return std::nullopt;
}

bool uses_radius(Family f) { return base_family(f) == Family::kM1; }

Immersion make_example(Family family, const FamilyParams& params) {
  if (uses_radius(family)) {
    if (!(params.r > 0.0 && params.r <= 1.0)) {
      throw DomainError("radius r must lie in (0, 1]");
    }
    return Immersion(family, FamilyParams::radius(params.r));
  }
  const double k = params.k, l = params.l;
  if (!(k > 0.0 && k < 1.0 && l > 0.0 && l < 1.0)) {
    throw DomainError("torus radii k, l must lie in (0, 1)");
  }
  if (std::abs(k * k + l * l - 1.0) > 1e-12) {
    throw DomainError("torus radii must satisfy k^2 + l^2 = 1");
  }
  return Immersion(family, FamilyParams::torus(k, l));
}

std::optional<IsometryMap> Immersion::outer_map() const {
  switch (family_) {
    case Family::kM2:
    case Family::kM5:
      return IsometryMap::F1();
    case Family::kM3:
    case Family::kM6:
      return IsometryMap::F2();
    default:
      return std::nullopt;
  }
}

AmbientPoint Immersion::base_point(const ChartCoords& u) const {
  const Quaternion x = s3_chart(u(0), u(1), u(2)).x;
  if (base_family(family_) == Family::kM1) {
    const Quaternion y = s2_chart(u(3), u(4)).y;
    const double r = params_.r;
    return {x, Quaternion(std::sqrt(1.0 - r * r)) + r * y};
  }
  const double k = params_.k, l = params_.l;
  return {x, {k * std::cos(u(3)), k * std::sin(u(3)), l * std::cos(u(4)), l * std::sin(u(4))}};
}

std::array<TangentVector, kHypersurfaceDim> Immersion::base_pushforward(const ChartCoords& u) const {
  const S3Chart xs = s3_chart(u(0), u(1), u(2));
  std::array<TangentVector, kHypersurfaceDim> d;
  for (int a = 0; a < 3; ++a) d[a] = {xs.dx[a], Quaternion{}};
  if (base_family(family_) == Family::kM1) {
    const S2Chart ys = s2_chart(u(3), u(4));
    d[3] = {Quaternion{}, params_.r * ys.dy[0]};
    d[4] = {Quaternion{}, params_.r * ys.dy[1]};
  } else {
    const double k = params_.k, l = params_.l;
    d[3] = {Quaternion{}, {-k * std::sin(u(3)), k * std::cos(u(3)), 0.0, 0.0}};
    d[4] = {Quaternion{}, {0.0, 0.0, -l * std::sin(u(4)), l * std::cos(u(4))}};
  }
  return d;
}

AmbientPoint Immersion::point(const ChartCoords& u) const {
  const AmbientPoint base = base_point(u);
  const auto outer = outer_map();
  return outer ? outer->apply(base) : base;
}

std::array<TangentVector, kHypersurfaceDim> Immersion::pushforward(const ChartCoords& u) const {
  auto d = base_pushforward(u);
  if (const auto outer = outer_map()) {
    const AmbientPoint base = base_point(u);
    for (auto& v : d) v = outer->differential(base, v);
  }
  return d;
}

std::array<TangentVector, kHypersurfaceDim> Immersion::pushforward_numeric(const ChartCoords& u,
                                                                         double step) const {
  std::array<TangentVector, kHypersurfaceDim> d;
  for (int a = 0; a < kHypersurfaceDim; ++a) {
    ChartCoords up = u, dn = u;
    up(a) += step;
    dn(a) -= step;
    const AmbientPoint fp = point(up), fm = point(dn);
    d[a] = {(fp.p - fm.p) * (0.5 / step), (fp.q - fm.q) * (0.5 / step)};
  }
  return d;
}

ChartCoords Immersion::sample_coords(Rng& rng) const {
  constexpr double pi = std::numbers::pi;
  std::uniform_real_distribution<double> angle(-pi, pi);
  std::uniform_real_distribution<double> tilt(-0.6, 0.6);
  std::uniform_real_distribution<double> latitude(-1.2, 1.2);
  ChartCoords u;
  u(0) = angle(rng);
  u(1) = tilt(rng);
  u(2) = angle(rng);
  u(3) = angle(rng);
  u(4) = uses_radius(family_) ? latitude(rng) : angle(rng);
  return u;
}

}  // namespace nks3
