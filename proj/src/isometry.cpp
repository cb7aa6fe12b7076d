#include "nks3/isometry.hpp"

#include <algorithm>
#include <cmath>

namespace nks3 {

namespace {

double max_abs(const Quaternion& q) {
  return std::max({std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
}

}  // namespace

IsometryMap IsometryMap::Fabc(const Quaternion& a, const Quaternion& b, const Quaternion& c) {
  IsometryMap m(Kind::kFabc);
  m.a_ = normalized(a);
  m.b_ = normalized(b);
  m.c_ = normalized(c);
  return m;
}

std::string IsometryMap::name() const {
  switch (kind_) {
    case Kind::kF1: return "F1";
    case Kind::kF2: return "F2";
    case Kind::kFabc: return "Fabc";
  }
  return "?";
}

QuatPair IsometryMap::apply_raw(const QuatPair& x) const {
  switch (kind_) {
    case Kind::kF1:
      return {x.V, x.U};
    case Kind::kF2: {
      const Quaternion pb = conjugate(x.U);
      return {pb, x.V * pb};
    }
    case Kind::kFabc: {
      const Quaternion cb = conjugate(c_);
      return {a_ * x.U * cb, b_ * x.V * cb};
    }
  }
  return x;
}

AmbientPoint IsometryMap::apply(const AmbientPoint& pt) const {
  const QuatPair r = apply_raw({pt.p, pt.q});
  return {r.U, r.V};
}

TangentVector IsometryMap::differential(const AmbientPoint& pt, const TangentVector& z) const {
  switch (kind_) {
    case Kind::kF1:
      return {z.V, z.U};
    case Kind::kF2: {
      const Quaternion pb = conjugate(pt.p);
      const Quaternion pupb = pb * z.U * pb;
      return {-pupb, z.V * pb - pt.q * pupb};
    }
    case Kind::kFabc: {
      const Quaternion cb = conjugate(c_);
      return {a_ * z.U * cb, b_ * z.V * cb};
    }
  }
  return z;
}

TangentVector IsometryMap::differential_numeric(const AmbientPoint& pt, const TangentVector& z,
                                                double step) const {
  const QuatPair base{pt.p, pt.q};
  const QuatPair fwd = apply_raw(base + step * z);
  const QuatPair bwd = apply_raw(base - step * z);
  return (fwd - bwd) * (0.5 / step);
}

double point_distance(const AmbientPoint& a, const AmbientPoint& b) {
  return std::max(max_abs(a.p - b.p), max_abs(a.q - b.q));
}

namespace {

// Running maximum that keeps a NaN once seen.
void raise_to(double& acc, double v) {
  if (std::isnan(acc)) return;
  if (std::isnan(v) || v > acc) acc = v;
}

}  // namespace

CompositionReport composition_checks(Rng& rng, int samples) {
  CompositionReport r;
  r.samples = samples;
  const IsometryMap f1 = IsometryMap::F1();
  const IsometryMap f2 = IsometryMap::F2();
  for (int s = 0; s < samples; ++s) {
    const AmbientPoint pt = sample_point(rng);
    const Quaternion a = sample_unit(rng);
    const Quaternion b = sample_unit(rng);
    const Quaternion c = sample_unit(rng);
    const IsometryMap fabc = IsometryMap::Fabc(a, b, c);
    const IsometryMap fbac = IsometryMap::Fabc(b, a, c);
    const IsometryMap fcba = IsometryMap::Fabc(c, b, a);

    raise_to(r.f1_involution, point_distance(f1.apply(f1.apply(pt)), pt));
    raise_to(r.f2_involution, point_distance(f2.apply(f2.apply(pt)), pt));
    raise_to(r.fabc_f1_exchange,
             point_distance(fabc.apply(f1.apply(pt)), f1.apply(fbac.apply(pt))));
    raise_to(r.fabc_f2_exchange,
             point_distance(fabc.apply(f2.apply(pt)), f2.apply(fcba.apply(pt))));
  }
  return r;
}

}  // namespace nks3
