#pragma once

// The isometries F1(p,q) = (q,p), F2(p,q) = (conj p, q conj p) and
// F_abc(p,q) = (a p conj c, b q conj c) of the nearly Kaehler S^3 x S^3.

#include <string>

#include "nks3/pointwise.hpp"

namespace nks3 {

class IsometryMap {
 public:
  enum class Kind { kF1, kF2, kFabc };

  static IsometryMap F1() { return IsometryMap(Kind::kF1); }
  static IsometryMap F2() { return IsometryMap(Kind::kF2); }
  // a, b, c are normalized; throws DomainError on a zero quaternion.
  static IsometryMap Fabc(const Quaternion& a, const Quaternion& b, const Quaternion& c);

  Kind kind() const { return kind_; }
  const Quaternion& a() const { return a_; }
  const Quaternion& b() const { return b_; }
  const Quaternion& c() const { return c_; }
  std::string name() const;

  AmbientPoint apply(const AmbientPoint& pt) const;

  // Closed-form differential at pt:
  //   dF1(U,V)   = (V, U)
  //   dF2(U,V)   = (-conj p U conj p, V conj p - q conj p U conj p)
  //   dF_abc(U,V) = (a U conj c, b V conj c)
  TangentVector differential(const AmbientPoint& pt, const TangentVector& z) const;

  // Central difference of the point map (extended polynomially to H x H).
  TangentVector differential_numeric(const AmbientPoint& pt, const TangentVector& z,
                                     double step = 1e-6) const;

 private:
  explicit IsometryMap(Kind k) : kind_{k} {}

  QuatPair apply_raw(const QuatPair& x) const;

  Kind kind_;
  Quaternion a_ = Quaternion::one();
  Quaternion b_ = Quaternion::one();
  Quaternion c_ = Quaternion::one();
};

// Max residuals of the group relations over random samples.
struct CompositionReport {
  int samples = 0;
  double f1_involution = 0.0;       // F1 o F1 = id
  double f2_involution = 0.0;       // F2 o F2 = id
  double fabc_f1_exchange = 0.0;    // F_abc o F1 = F1 o F_bac
  double fabc_f2_exchange = 0.0;    // F_abc o F2 = F2 o F_cba
};

CompositionReport composition_checks(Rng& rng, int samples = 100);

// Largest coordinate difference between two points (as elements of R^8).
double point_distance(const AmbientPoint& a, const AmbientPoint& b);

}  // namespace nks3
