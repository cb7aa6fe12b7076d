#include "nks3/hypersurface.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>

#include "nks3/intrinsic.hpp"

namespace nks3 {

namespace {

Mat65 pushforward_frame(const Immersion& m, const ChartCoords& u, AmbientPoint* point_out) {
  const AmbientPoint pt = m.point(u);
  const auto d = m.pushforward(u);
  Mat65 pf;
  for (int a = 0; a < kHypersurfaceDim; ++a) pf.col(a) = to_frame(pt, d[a]);
  if (point_out) *point_out = pt;
  return pf;
}

Mat5 gram(const StructureTables& t, const Mat65& pf) { return pf.transpose() * t.g * pf; }

// Completes the g-orthonormal tangent frame by one g-unit vector.
FrameVector complete_normal(const StructureTables& t, const Mat65& tangent) {
  FrameVector best = FrameVector::Zero();
  double best_norm = -1.0;
  for (int e = 0; e < kAmbientDim; ++e) {
    FrameVector v = FrameVector::Unit(e);
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < kHypersurfaceDim; ++i) {
        v -= t.metric(v, tangent.col(i)) * tangent.col(i);
      }
    }
    const double n = t.norm(v);
    if (n > best_norm) {
      best_norm = n;
      best = v / n;
    }
  }
  return best;
}

struct Frames {
  AmbientPoint point;
  Mat65 pushforward;
  Mat65 tangent;
  Mat5 chart_to_frame;
  FrameVector xi;
};

Frames compute_frames(const Immersion& m, const ChartCoords& u, bool flip) {
  const StructureTables& t = tables();
  Frames f;
  f.pushforward = pushforward_frame(m, u, &f.point);
  const Mat5 h = gram(t, f.pushforward);
  const double smallest = Eigen::SelfAdjointEigenSolver<Mat5>(h, Eigen::EigenvaluesOnly)
                              .eigenvalues()
                              .minCoeff();
  if (!(smallest > kMinGramEigenvalue)) {
    throw DegenerateImmersion("pushforward is rank deficient at the requested chart point");
  }
  // h = L L^T, tangent = pushforward L^-T.
  const Eigen::LLT<Mat5> llt(h);
  const Mat5 l_inv = llt.matrixL().solve(Mat5::Identity());
  f.chart_to_frame = l_inv.transpose();
  f.tangent = f.pushforward * f.chart_to_frame;
  f.xi = complete_normal(t, f.tangent);

  Mat6 oriented;
  oriented << f.pushforward, f.xi;
  if (oriented.determinant() < 0.0) f.xi = -f.xi;
  if (flip) f.xi = -f.xi;
  return f;
}

Vec5 tangential_coeffs(const StructureTables& t, const Mat65& tangent, const FrameVector& v) {
  return tangent.transpose() * (t.g * v);
}

// Ambient nearly Kaehler derivatives of a field along each chart direction.
// `field` maps chart coordinates to frame coefficients.
template <class Field>
std::array<FrameVector, kHypersurfaceDim> ambient_derivatives(const Immersion& m,
                                                              const ChartCoords& u,
                                                              const Frames& at, Field&& field,
                                                              const AnalyzeOptions& options) {
  const StructureTables& t = tables();
  const double h = options.step;
  const FrameVector y = field(u);
  std::array<FrameVector, kHypersurfaceDim> out;
  for (int a = 0; a < kHypersurfaceDim; ++a) {
    ChartCoords up = u, dn = u;
    up(a) += h;
    dn(a) -= h;
    const FrameVector x = at.pushforward.col(a);
    if (options.route == NormalDerivative::kEuclidean) {
      const TangentVector yp = to_tangent(m.point(up), field(up));
      const TangentVector ym = to_tangent(m.point(dn), field(dn));
      const FrameVector flat = to_frame(at.point, (yp - ym) * (0.5 / h));
      out[a] = flat - 0.5 * (t.J * t.tensor_G(x, t.P * y) + t.J * t.tensor_G(y, t.P * x));
    } else {
      const FrameVector dy = (field(up) - field(dn)) / (2.0 * h);
      out[a] = dy + t.nabla(x, y);
    }
  }
  return out;
}

HypersurfacePointData assemble(const Immersion& m, const ChartCoords& u, const Frames& f,
                               const AnalyzeOptions& options) {
  const StructureTables& t = tables();
  HypersurfacePointData d;
  d.coords = u;
  d.point = f.point;
  d.pushforward = f.pushforward;
  d.tangent_frame = f.tangent;
  d.chart_to_frame = f.chart_to_frame;
  d.xi = f.xi;
  d.U = -(t.J * f.xi);
  d.phi = f.tangent.transpose() * t.g * t.J * f.tangent;
  d.eta = tangential_coeffs(t, f.tangent, d.U);

  const auto normal = [&](const ChartCoords& v) { return unit_normal(m, v); };
  const auto dxi = ambient_derivatives(m, u, f, normal, options);
  Mat5 s;
  for (int a = 0; a < kHypersurfaceDim; ++a) s.col(a) = -tangential_coeffs(t, f.tangent, dxi[a]);
  d.A = s * f.chart_to_frame;
  d.alpha = d.eta.dot(d.shape_symmetric() * d.eta);
  return d;
}

void negate_normal(HypersurfacePointData& d) {
  d.xi = -d.xi;
  d.U = -d.U;
  d.eta = -d.eta;
  d.A = -d.A;
  d.alpha = -d.alpha;
}

bool prefers_negation(const Mat5& a) {
  const Eigen::Matrix<double, 5, 1> ev =
      Eigen::SelfAdjointEigenSolver<Mat5>(a, Eigen::EigenvaluesOnly).eigenvalues();
  const double lo = ev(0), hi = ev(4);
  const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
  return -lo - hi > kClusterRelTol * scale;
}

AnalyzeOptions chart_options(const AnalyzeOptions& options) {
  AnalyzeOptions o = options;
  o.orientation = Orientation::kChart;
  o.flip_normal = false;
  return o;
}

Vec5 chart_to_tangent(const HypersurfacePointData& d, const Vec5& chart) {
  return d.chart_to_frame.triangularView<Eigen::Upper>().solve(chart);
}

}  // namespace

Vec5 HypersurfacePointData::tangential(const FrameVector& v) const {
  return tangential_coeffs(tables(), tangent_frame, v);
}

double HypersurfacePointData::hopf_residual() const {
  const Vec5 au = shape_symmetric() * eta;
  return (au - au.dot(eta) * eta).norm();
}

Mat5 HypersurfacePointData::shape_in_chart() const {
  return chart_to_frame * shape_symmetric() * chart_to_frame.inverse();
}

FrameVector unit_normal(const Immersion& m, const ChartCoords& u, bool flip) {
  return compute_frames(m, u, flip).xi;
}

HypersurfacePointData analyze_point(const Immersion& m, const ChartCoords& u,
                                    const AnalyzeOptions& options) {
  HypersurfacePointData d = assemble(m, u, compute_frames(m, u, false), options);
  bool negate = options.orientation == Orientation::kLargestPositive &&
                prefers_negation(d.shape_symmetric());
  if (options.flip_normal) negate = !negate;
  if (negate) negate_normal(d);
  return d;
}

std::string_view pxi_class_name(PxiClass c) {
  switch (c) {
    case PxiClass::kPlus: return "PLUS";
    case PxiClass::kMinus: return "MINUS";
    case PxiClass::kReflect: return "REFLECT";
    case PxiClass::kOther: return "OTHER";
  }
  return "?";
}

std::vector<int> cluster_sorted(const std::vector<double>& sorted) {
  std::vector<int> sizes;
  if (sorted.empty()) return sizes;
  double scale = 0.0;
  for (double v : sorted) scale = std::max(scale, std::abs(v));
  const double tol = std::max(kClusterRelTol * scale, kClusterAbsFloor);
  sizes.push_back(1);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] <= tol) {
      ++sizes.back();
    } else {
      sizes.push_back(1);
    }
  }
  return sizes;
}

SpectralReport spectral_report(const HypersurfacePointData& data) {
  const StructureTables& t = tables();
  SpectralReport r;
  const Eigen::SelfAdjointEigenSolver<Mat5> solver(data.shape_symmetric());
  r.eigenvectors = solver.eigenvectors();
  r.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + 5);
  r.multiplicities = cluster_sorted(r.eigenvalues);

  std::size_t start = 0;
  double theta_weight = -1.0;
  for (int size : r.multiplicities) {
    double mean = 0.0;
    for (int i = 0; i < size; ++i) mean += r.eigenvalues[start + i];
    mean /= size;
    r.cluster_values.push_back(mean);
    if (size == 2 && std::abs(mean) > theta_weight) {
      theta_weight = std::abs(mean);
      const Vec5 x1 = r.eigenvectors.col(static_cast<int>(start));
      const Vec5 x2 = r.eigenvectors.col(static_cast<int>(start) + 1);
      r.theta = std::abs(x2.dot(data.phi * x1));
    }
    start += size;
  }

  r.alpha = data.alpha;
  r.hopf_residual = data.hopf_residual();
  r.trace = data.shape_symmetric().trace();
  r.mean_curvature = r.trace / kHypersurfaceDim;

  const FrameVector pxi = t.P * data.xi;
  r.a = t.metric(pxi, data.xi);
  r.b = t.metric(pxi, data.U);
  r.c = t.norm(pxi - r.a * data.xi - r.b * data.U);
  r.dim_D = r.c <= kDistributionTol ? 2 : 4;
  return r;
}

PxiClass classify_P_xi(const SpectralReport& r) {
  if (r.dim_D != 2) throw NotApplicable("P xi classification requires dim D = 2");
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  if (std::abs(r.a - 0.5) <= kPxiTol && std::abs(r.b + half_sqrt3) <= kPxiTol) return PxiClass::kPlus;
  if (std::abs(r.a - 0.5) <= kPxiTol && std::abs(r.b - half_sqrt3) <= kPxiTol) return PxiClass::kMinus;
  if (std::abs(r.a + 1.0) <= kPxiTol && std::abs(r.b) <= kPxiTol) return PxiClass::kReflect;
  return PxiClass::kOther;
}

PxiClass classify_P_xi(const HypersurfacePointData& data) {
  return classify_P_xi(spectral_report(data));
}

double holomorphic_preservation_residual(const HypersurfacePointData& data) {
  // sup over unit X in U^perp of g(PX, U) = |component of PU in U^perp|.
  const StructureTables& t = tables();
  const Vec5 pu = data.tangential(t.P * data.U);
  return (pu - pu.dot(data.eta) * data.eta).norm();
}

double structure_vector_residual(const Immersion& m, const HypersurfacePointData& data,
                                 const Vec5& x, const AnalyzeOptions& options) {
  const StructureTables& t = tables();
  Frames f{data.point, data.pushforward, data.tangent_frame, data.chart_to_frame, data.xi};
  const double sign = t.metric(unit_normal(m, data.coords), data.xi) > 0.0 ? 1.0 : -1.0;
  const auto structure = [&](const ChartCoords& v) -> FrameVector {
    return -sign * (t.J * unit_normal(m, v));
  };
  const auto du = ambient_derivatives(m, data.coords, f, structure, options);
  const Vec5 chart = data.chart_to_frame * x;
  FrameVector nabla_x_u = FrameVector::Zero();
  for (int a = 0; a < kHypersurfaceDim; ++a) nabla_x_u += chart(a) * du[a];

  const FrameVector tangential_part = data.ambient(data.tangential(nabla_x_u));
  const FrameVector phi_a_x = data.ambient(data.phi * (data.shape_symmetric() * x));
  const FrameVector g_x_xi = t.tensor_G(data.ambient(x), data.xi);
  return t.norm(tangential_part - phi_a_x + g_x_xi);
}

double hopf_lemma_residual(const HypersurfacePointData& data, const Vec5& x, const Vec5& y) {
  if (std::abs(data.eta.dot(x)) > 1e-8 || std::abs(data.eta.dot(y)) > 1e-8) {
    throw PreconditionError("X and Y must be orthogonal to U");
  }
  if (data.hopf_residual() > 1e-6) throw PreconditionError("point is not Hopf");

  const StructureTables& t = tables();
  const Mat5 a = data.shape_symmetric();
  const double alpha = data.alpha;
  const Mat5 shifted = alpha * Mat5::Identity() - a;
  const FrameVector xa = data.ambient(x), ya = data.ambient(y);
  const FrameVector px = t.P * xa, py = t.P * ya;

  const double lhs = (data.phi * x).dot(y) / 6.0 -
                     2.0 / 3.0 *
                         (t.metric(px, data.xi) * t.metric(py, data.U) -
                          t.metric(px, data.U) * t.metric(py, data.xi));

  const Vec5 g_x_xi = data.tangential(t.tensor_G(xa, data.xi));
  const FrameVector g_shift = t.tensor_G(data.ambient(shifted * x), data.xi);
  const double rhs = (shifted * g_x_xi).dot(y) + t.metric(g_shift, ya) -
                     alpha * ((a * data.phi + data.phi * a) * x).dot(y) +
                     2.0 * (a * (data.phi * (a * x))).dot(y);
  return std::abs(lhs - rhs);
}

namespace {

MetricField chart_metric(const Immersion& m) {
  return [&m](const Eigen::VectorXd& v) -> Eigen::MatrixXd {
    const ChartCoords u = v;
    return gram(tables(), pushforward_frame(m, u, nullptr));
  };
}

}  // namespace

double gauss_residual(const Immersion& m, const ChartCoords& u, const Vec5& x, const Vec5& y,
                      const Vec5& z, const AnalyzeOptions& options, double step) {
  const StructureTables& t = tables();
  const HypersurfacePointData d = analyze_point(m, u, chart_options(options));
  const ChartCurvature curv(chart_metric(m), u, step);
  const Vec5 r_chart = curv.apply(d.chart_to_frame * x, d.chart_to_frame * y,
                                  d.chart_to_frame * z);
  const Vec5 lhs = chart_to_tangent(d, r_chart);

  const FrameVector xa = d.ambient(x), ya = d.ambient(y), za = d.ambient(z);
  const FrameVector jx = t.J * xa, jy = t.J * ya;
  const FrameVector px = t.P * xa, py = t.P * ya;
  const FrameVector jpx = t.J * px, jpy = t.J * py;
  const Mat5 a = d.shape_symmetric();

  Vec5 rhs = 5.0 / 12.0 * (y.dot(z) * x - x.dot(z) * y);
  rhs += 1.0 / 12.0 *
         (t.metric(jy, za) * (d.phi * x) - t.metric(jx, za) * (d.phi * y) -
          2.0 * t.metric(jx, ya) * (d.phi * z));
  rhs += 1.0 / 3.0 *
         (t.metric(py, za) * d.tangential(px) - t.metric(px, za) * d.tangential(py) +
          t.metric(jpy, za) * d.tangential(jpx) - t.metric(jpx, za) * d.tangential(jpy));
  rhs += (a * z).dot(y) * (a * x) - (a * z).dot(x) * (a * y);
  return (lhs - rhs).norm();
}

double codazzi_residual(const Immersion& m, const ChartCoords& u, const Vec5& x, const Vec5& y,
                        const AnalyzeOptions& options, double step) {
  const StructureTables& t = tables();
  const AnalyzeOptions fixed = chart_options(options);
  const HypersurfacePointData d = analyze_point(m, u, fixed);
  const auto gamma = christoffel(chart_metric(m), u, step);
  const Mat5 a_chart = d.shape_in_chart();

  // nabla_c A in chart coordinates.
  std::array<Mat5, kHypersurfaceDim> nabla_a;
  for (int c = 0; c < kHypersurfaceDim; ++c) {
    ChartCoords up = u, dn = u;
    up(c) += step;
    dn(c) -= step;
    const Mat5 da = (analyze_point(m, up, fixed).shape_in_chart() -
                     analyze_point(m, dn, fixed).shape_in_chart()) /
                    (2.0 * step);
    Mat5 gc;
    for (int i = 0; i < kHypersurfaceDim; ++i) {
      for (int j = 0; j < kHypersurfaceDim; ++j) gc(i, j) = gamma[i](c, j);
    }
    nabla_a[c] = da + gc * a_chart - a_chart * gc;
  }
  const Vec5 xc = d.chart_to_frame * x, yc = d.chart_to_frame * y;
  Vec5 lhs_chart = Vec5::Zero();
  for (int c = 0; c < kHypersurfaceDim; ++c) {
    lhs_chart += xc(c) * (nabla_a[c] * yc) - yc(c) * (nabla_a[c] * xc);
  }
  const Vec5 lhs = chart_to_tangent(d, lhs_chart);

  const FrameVector xa = d.ambient(x), ya = d.ambient(y);
  const FrameVector px = t.P * xa, py = t.P * ya;
  Vec5 rhs = 1.0 / 12.0 *
             (x.dot(d.eta) * (d.phi * y) - y.dot(d.eta) * (d.phi * x) -
              2.0 * t.metric(t.J * xa, ya) * d.eta);
  rhs += 1.0 / 3.0 *
         (t.metric(px, d.xi) * d.tangential(py) - t.metric(py, d.xi) * d.tangential(px) +
          t.metric(px, d.U) * d.tangential(t.J * py) - t.metric(py, d.U) * d.tangential(t.J * px));
  return (lhs - rhs).norm();
}

double sectional_curvature(const Immersion& m, const ChartCoords& u, const Vec5& x_chart,
                           const Vec5& y_chart, double step) {
  const ChartCurvature curv(chart_metric(m), u, step);
  return curv.sectional(x_chart, y_chart);
}

double leaf_sectional_curvature(const Immersion& m, const ChartCoords& u,
                                std::span<const int> coords, const Eigen::VectorXd& x,
                                const Eigen::VectorXd& y, double step) {
  const Eigen::Index n = static_cast<Eigen::Index>(coords.size());
  if (n < 2 || x.size() != n || y.size() != n) {
    throw std::invalid_argument("leaf vectors must match the number of leaf coordinates");
  }
  for (int c : coords) {
    if (c < 0 || c >= kHypersurfaceDim) throw std::invalid_argument("chart coordinate out of range");
  }
  const MetricField full = chart_metric(m);
  const std::vector<int> idx(coords.begin(), coords.end());
  const MetricField leaf = [&](const Eigen::VectorXd& w) -> Eigen::MatrixXd {
    ChartCoords v = u;
    for (Eigen::Index a = 0; a < n; ++a) v(idx[a]) = w(a);
    const Eigen::MatrixXd h = full(v);
    Eigen::MatrixXd sub(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) sub(a, b) = h(idx[a], idx[b]);
    }
    return sub;
  };
  Eigen::VectorXd base(n);
  for (Eigen::Index a = 0; a < n; ++a) base(a) = u(idx[a]);
  const ChartCurvature curv(leaf, base, step);
  return curv.sectional(x, y);
}

ThetaConsistency theta_r_consistency(const Immersion& m, const ChartCoords& u) {
  if (!uses_radius(m.family())) throw NotApplicable("theta-r relation applies to m1..m3");
  const SpectralReport rep = spectral_report(analyze_point(m, u));
  if (!rep.theta) throw DegenerateImmersion("no 2-dimensional principal eigenspace");

  ThetaConsistency out;
  const double theta = *rep.theta;
  out.theta = theta;
  const double r = m.params().r;
  out.radius_residual = std::abs(r - std::sqrt(3.0) * theta / std::sqrt(1.0 + 2.0 * theta * theta));

  const double root = std::sqrt(std::max(0.0, 1.0 - theta * theta));
  const double lambda = (root + 1.0) / (2.0 * std::sqrt(3.0) * theta);
  const double beta = (root - 1.0) / (2.0 * std::sqrt(3.0) * theta);
  out.product = lambda * beta;

  std::vector<double> observed;
  for (std::size_t c = 0; c < rep.multiplicities.size(); ++c) {
    if (rep.multiplicities[c] == 2) observed.push_back(std::abs(rep.cluster_values[c]));
  }
  if (observed.size() != 2) throw DegenerateImmersion("expected two 2-dimensional eigenspaces");
  std::sort(observed.begin(), observed.end());
  std::array<double, 2> expected{std::abs(beta), std::abs(lambda)};
  std::sort(expected.begin(), expected.end());
  out.curvature_residual =
      std::max(std::abs(observed[0] - expected[0]), std::abs(observed[1] - expected[1]));
  return out;
}

std::vector<double> closed_form_spectrum(Family f, const FamilyParams& params) {
  std::vector<double> s;
  if (uses_radius(f)) {
    const double r = params.r;
    const double mid = std::sqrt(1.0 - r * r) / (2.0 * r);
    const double half_gap = std::sqrt(3.0 - 2.0 * r * r) / (2.0 * std::sqrt(3.0) * r);
    const double lambda = mid - half_gap, beta = mid + half_gap;
    s = {0.0, lambda, lambda, beta, beta};
  } else {
    const double k = params.k, l = params.l;
    const double rk = std::sqrt(9.0 * k * k + 3.0 * l * l);
    const double rl = std::sqrt(3.0 * k * k + 9.0 * l * l);
    s = {0.0, (3.0 * k - rk) / (6.0 * l), (3.0 * k + rk) / (6.0 * l), (-3.0 * l - rl) / (6.0 * k),
         (-3.0 * l + rl) / (6.0 * k)};
  }
  std::sort(s.begin(), s.end());
  return s;
}

double spectrum_distance_up_to_sign(std::vector<double> computed, std::vector<double> expected) {
  if (computed.size() != expected.size()) return std::numeric_limits<double>::infinity();
  std::sort(computed.begin(), computed.end());
  std::sort(expected.begin(), expected.end());
  std::vector<double> negated(computed.size());
  std::transform(computed.begin(), computed.end(), negated.begin(), [](double v) { return -v; });
  std::sort(negated.begin(), negated.end());
  double same = 0.0, flipped = 0.0;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    same = std::max(same, std::abs(computed[i] - expected[i]));
    flipped = std::max(flipped, std::abs(negated[i] - expected[i]));
  }
  if (std::isnan(same) || std::isnan(flipped)) return std::numeric_limits<double>::quiet_NaN();
  return std::min(same, flipped);
}

}  // namespace nks3
