#include "nks3/verify.hpp"

#include <algorithm>
#include <cfenv>
#include <cfloat>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Core>
#include <json.hpp>

#include "nks3/frame.hpp"
#include "nks3/hypersurface.hpp"
#include "nks3/isometry.hpp"
#include "nks3/parallel.hpp"
#include "nks3/simd/quat_batch.hpp"

namespace nks3 {

namespace {

using Clock = std::chrono::steady_clock;

// Running maximum that keeps a non-finite value once seen.
class MaxResidual {
 public:
  void add(double v) {
    if (!std::isfinite(v)) {
      bad_ = true;
    } else {
      max_ = std::max(max_, v);
    }
  }
  double value() const { return bad_ ? std::numeric_limits<double>::quiet_NaN() : max_; }

 private:
  double max_ = 0.0;
  bool bad_ = false;
};

void require_samples(int samples) {
  if (samples < 1) throw SuitePrecondition("samples must be at least 1");
}

void finish(SuiteReport& report, Clock::time_point start) {
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  report.duration_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  report.environment = current_environment();
}

double euclidean_norm(const QuatPair& z) { return std::sqrt(euclidean_dot(z, z)); }

// g-orthonormal X, Y with g(JX, Y) = 0, built from random frame vectors.
std::pair<FrameVector, FrameVector> orthonormal_hermitian_pair(const StructureTables& t,
                                                                const FrameVector& a,
                                                                const FrameVector& b) {
  const FrameVector x = a / t.norm(a);
  const FrameVector jx = t.J * x;
  FrameVector y = b - t.metric(b, x) * x - t.metric(b, jx) * jx;
  y /= t.norm(y);
  return {x, y};
}

}  // namespace

CheckResult make_check(std::string id, std::string anchor, int samples, double max_residual,
                       double tolerance) {
  CheckResult c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.samples = samples;
  c.max_residual = max_residual;
  c.tolerance = tolerance;
  c.pass = std::isfinite(max_residual) && max_residual <= tolerance;
  return c;
}

Environment current_environment() {
  Environment env;
#if defined(__clang__)
  env.compiler = "clang " __clang_version__;
#elif defined(__GNUC__)
  env.compiler = "gcc " __VERSION__;
#else
  env.compiler = "unknown";
#endif
  env.simd_isa = std::string(simd::isa_name(simd::detected_isa()));
  switch (std::fegetround()) {
    case FE_TONEAREST: env.rounding_mode = "to_nearest"; break;
    case FE_UPWARD: env.rounding_mode = "upward"; break;
    case FE_DOWNWARD: env.rounding_mode = "downward"; break;
    case FE_TOWARDZERO: env.rounding_mode = "toward_zero"; break;
    default: env.rounding_mode = "unknown"; break;
  }
  env.flt_eval_method = FLT_EVAL_METHOD;
  env.fp_contract_off = true;
  env.eigen_version = std::to_string(EIGEN_WORLD_VERSION) + "." +
                      std::to_string(EIGEN_MAJOR_VERSION) + "." +
                      std::to_string(EIGEN_MINOR_VERSION);
  return env;
}

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

SuiteReport run_structure_suite(std::uint64_t seed, int samples) {
  require_samples(samples);
  const auto start = Clock::now();
  const StructureTables& t = tables();
  Rng rng(seed);

  // Four random tangent vectors per sample, converted in one batch.
  constexpr int kPerSample = 4;
  const auto n = static_cast<std::size_t>(samples);
  std::vector<AmbientPoint> points(n);
  std::vector<AmbientPoint> batch_points(n * kPerSample);
  std::vector<TangentVector> vectors(n * kPerSample);
  for (std::size_t s = 0; s < n; ++s) {
    points[s] = sample_point(rng);
    for (int k = 0; k < kPerSample; ++k) {
      batch_points[s * kPerSample + k] = points[s];
      vectors[s * kPerSample + k] = sample_tangent(points[s], rng);
    }
  }
  std::vector<FrameVector> frames(vectors.size());
  to_frame_batch(batch_points, vectors, frames);

  MaxResidual antisym, j_anti, skew, quartic, nabla_p, pg, q_pj, euclid, curv, agree, norm13;
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  for (std::size_t s = 0; s < n; ++s) {
    const AmbientPoint& pt = points[s];
    const FrameVector& x = frames[s * kPerSample + 0];
    const FrameVector& y = frames[s * kPerSample + 1];
    const FrameVector& z = frames[s * kPerSample + 2];
    const FrameVector& w = frames[s * kPerSample + 3];
    const FrameVector gxy = t.tensor_G(x, y);

    antisym.add(t.norm(gxy + t.tensor_G(y, x)));
    j_anti.add(t.norm(t.tensor_G(x, t.J * y) + t.J * gxy));
    skew.add(std::abs(t.metric(gxy, z) + t.metric(t.tensor_G(x, z), y)));

    const double rhs = (t.metric(x, z) * t.metric(y, w) - t.metric(x, w) * t.metric(y, z) +
                        t.metric(t.J * x, z) * t.metric(t.J * w, y) -
                        t.metric(t.J * x, w) * t.metric(t.J * z, y)) /
                       3.0;
    quartic.add(std::abs(t.metric(gxy, t.tensor_G(z, w)) - rhs));

    nabla_p.add(nabla_P_residual(t, x, y));
    pg.add(t.norm(t.P * gxy + t.tensor_G(t.P * x, t.P * y)));

    const TangentVector zx = vectors[s * kPerSample + 0];
    q_pj.add(euclidean_norm(apply_Q(pt, zx) - apply_Q_via_PJ(pt, zx)));
    q_pj.add(t.norm(t.Q * x - inv_sqrt3 * (2.0 * (t.P * (t.J * x)) - t.J * x)));

    euclid.add(euclidean_relation_residual(t, pt, x, y));
    curv.add(t.norm(t.curvature_from_connection(x, y, z) - t.curvature_closed_form(x, y, z)));

    // Quaternion formulas against the tables, and batch against scalar conversion.
    const TangentVector zy = vectors[s * kPerSample + 1];
    agree.add((to_frame(pt, zx) - x).norm());
    agree.add((to_frame(pt, apply_J(pt, zx)) - t.J * x).norm());
    agree.add((to_frame(pt, apply_P(pt, zx)) - t.P * x).norm());
    agree.add(std::abs(metric_g(pt, zx, zy) - t.metric(x, y)));
    agree.add(std::abs(metric_g_expanded(pt, zx, zy) - t.metric(x, y)));

    const auto [ox, oy] = orthonormal_hermitian_pair(t, z, w);
    const FrameVector g = t.tensor_G(ox, oy);
    norm13.add(std::abs(t.metric(g, g) - 1.0 / 3.0));
  }

  SuiteReport report;
  report.suite = "structure";
  report.seed = seed;
  constexpr double tol = 1e-10;
  auto add = [&](const char* id, const char* anchor, const MaxResidual& m, int count) {
    report.checks.push_back(make_check(id, anchor, count, m.value(), tol));
  };
  add("G_antisymmetric", "G(X,Y)+G(Y,X)=0", antisym, samples);
  add("G_J_anticommute", "G(X,JY)+JG(X,Y)=0", j_anti, samples);
  add("G_skew", "g(G(X,Y),Z)+g(G(X,Z),Y)=0", skew, samples);
  add("G_quartic",
      "g(G(X,Y),G(Z,W))=1/3[g(X,Z)g(Y,W)-g(X,W)g(Y,Z)+g(JX,Z)g(JW,Y)-g(JX,W)g(JZ,Y)]", quartic,
      samples);
  add("nabla_P", "2(nabla_X P)Y=JG(X,PY)+JPG(X,Y)", nabla_p, samples);
  add("P_G", "PG(X,Y)+G(PX,PY)=0", pg, samples);
  add("Q_via_PJ", "QZ=(2PJZ-JZ)/sqrt(3)", q_pj, samples);
  add("euclidean_connection", "nabla^E_X Y=nabla_X Y+1/2[JG(X,PY)+JG(Y,PX)]", euclid, samples);
  add("curvature_closed_form", "R(X,Y)Z closed form in g, J, P", curv, samples);
  add("pointwise_frame_agreement", "quaternion J, P, g versus frame tables", agree, samples);
  add("G_norm_one_third", "|G(X,Y)|^2=1/3 for orthonormal X, Y with g(JX,Y)=0", norm13, samples);

  MaxResidual torsion, compat;
  torsion.add(torsion_residual(t));
  compat.add(metric_compatibility_residual(t));
  add("connection_torsion_free", "nabla_X Y-nabla_Y X=[X,Y]", torsion, kAmbientDim * kAmbientDim);
  add("connection_metric", "X g(Y,Z)=g(nabla_X Y,Z)+g(Y,nabla_X Z)", compat,
      kAmbientDim * kAmbientDim * kAmbientDim);

  finish(report, start);
  return report;
}

namespace {

struct HypersurfaceSample {
  ChartCoords u;
  Vec5 x, y, z;
};

struct HypersurfaceResiduals {
  double hopf = 0, alpha = 0, symmetry = 0, spectrum = 0, multiplicity = 0, distribution = 0;
  double holomorphic = 0, trichotomy = 0, pxi_class = 0, trace = 0, minimal = 0;
  double structure = 0, lemma = 0, gauss = 0, codazzi = 0;
  double theta_radius = 0, theta_curvature = 0, leaf_s3 = 0, leaf_s2 = 0;
};

constexpr int kSecondOrderSamples = 8;

std::vector<int> expected_pattern(Family f) {
  if (uses_radius(f)) return {1, 2, 2};
  return {1, 1, 1, 1, 1};
}

std::vector<int> sorted_pattern(std::vector<int> p) {
  std::sort(p.begin(), p.end());
  return p;
}

double pxi_distance(double a, double b, double a0, double b0) {
  return std::max(std::abs(a - a0), std::abs(b - b0));
}

std::string params_label(Family f, const FamilyParams& p) {
  std::ostringstream os;
  os.precision(6);
  os << family_name(f);
  if (uses_radius(f)) {
    os << "(r=" << p.r << ")";
  } else {
    os << "(k=" << p.k << ",l=" << p.l << ")";
  }
  return os.str();
}

}  // namespace

SuiteReport run_hypersurface_suite(Family family, const FamilyParams& params, std::uint64_t seed,
                                   int samples) {
  require_samples(samples);
  const auto start = Clock::now();
  const Immersion m = make_example(family, params);
  const bool radial = uses_radius(family);
  Rng rng(seed);

  const auto n = static_cast<std::size_t>(samples);
  std::vector<HypersurfaceSample> inputs(n);
  std::normal_distribution<double> normal;
  for (auto& in : inputs) {
    in.u = m.sample_coords(rng);
    for (int i = 0; i < kHypersurfaceDim; ++i) {
      in.x(i) = normal(rng);
      in.y(i) = normal(rng);
      in.z(i) = normal(rng);
    }
  }

  const std::vector<double> expected = closed_form_spectrum(family, params);
  double expected_trace = 0.0;
  for (double v : expected) expected_trace += v;
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  const std::vector<int> pattern = expected_pattern(family);
  const int pxi_case = static_cast<int>(family) % 3;  // 0 PLUS, 1 MINUS, 2 REFLECT
  const double a_expected = pxi_case == 2 ? -1.0 : 0.5;
  const double b_expected = pxi_case == 0 ? -half_sqrt3 : (pxi_case == 1 ? half_sqrt3 : 0.0);
  const double r = params.r;
  const double theta_r = radial ? std::sqrt(r * r / (3.0 - 2.0 * r * r)) : 0.0;
  const double leaf_s2_expected =
      radial ? (1.0 + 2.0 * theta_r * theta_r) / (4.0 * theta_r * theta_r) : 0.0;
  const int second_order = std::min(samples, kSecondOrderSamples);
  const int leaf_coords_s3[3] = {0, 1, 2};
  const int leaf_coords_s2[2] = {3, 4};

  std::vector<HypersurfaceResiduals> out(n);
  parallel_for(n, [&](std::size_t s) {
    const HypersurfaceSample& in = inputs[s];
    HypersurfaceResiduals& o = out[s];
    const HypersurfacePointData d = analyze_point(m, in.u);
    const SpectralReport rep = spectral_report(d);

    o.hopf = rep.hopf_residual;
    o.alpha = std::abs(rep.alpha);
    o.symmetry = d.symmetry_residual();
    o.spectrum = spectrum_distance_up_to_sign(rep.eigenvalues, expected);
    o.multiplicity = sorted_pattern(rep.multiplicities) == pattern ? 0.0 : 1.0;
    o.distribution = rep.c;
    o.holomorphic = holomorphic_preservation_residual(d);
    o.trichotomy = std::min({pxi_distance(rep.a, rep.b, 0.5, -half_sqrt3),
                             pxi_distance(rep.a, rep.b, 0.5, half_sqrt3),
                             pxi_distance(rep.a, rep.b, -1.0, 0.0)});
    o.pxi_class = pxi_distance(rep.a, rep.b, a_expected, b_expected);
    o.trace = std::abs(std::abs(rep.trace) - std::abs(expected_trace));
    o.minimal = std::abs(rep.trace);

    o.structure = structure_vector_residual(m, d, in.x);
    const Vec5 xp = in.x - d.eta * d.eta.dot(in.x);
    const Vec5 yp = in.y - d.eta * d.eta.dot(in.y);
    try {
      o.lemma = hopf_lemma_residual(d, xp, yp);
    } catch (const PreconditionError&) {
      o.lemma = std::numeric_limits<double>::quiet_NaN();
    }

    if (static_cast<int>(s) < second_order) {
      o.gauss = gauss_residual(m, in.u, in.x, in.y, in.z);
      o.codazzi = codazzi_residual(m, in.u, in.x, in.y);
      if (radial) {
        o.leaf_s3 = std::abs(leaf_sectional_curvature(m, in.u, leaf_coords_s3,
                                                      in.x.head<3>(), in.y.head<3>()) -
                             0.75);
        o.leaf_s2 = std::abs(leaf_sectional_curvature(m, in.u, leaf_coords_s2,
                                                      Eigen::Vector2d(1.0, 0.0),
                                                      Eigen::Vector2d(0.0, 1.0)) -
                             leaf_s2_expected);
      }
    }
    if (radial) {
      const ThetaConsistency tc = theta_r_consistency(m, in.u);
      o.theta_radius = tc.radius_residual;
      o.theta_curvature = std::max(tc.curvature_residual, std::abs(tc.product + 1.0 / 12.0));
    }
  });

  SuiteReport report;
  report.suite = "hypersurface:" + params_label(family, params);
  report.seed = seed;
  auto add = [&](const char* id, const char* anchor, double HypersurfaceResiduals::*field,
                 int count, double tol) {
    MaxResidual acc;
    for (int s = 0; s < count; ++s) acc.add(out[s].*field);
    report.checks.push_back(make_check(id, anchor, count, acc.value(), tol));
  };
  using H = HypersurfaceResiduals;
  add("hopf", "AU=alpha U", &H::hopf, samples, 1e-6);
  add("alpha_zero", "alpha=0", &H::alpha, samples, 1e-6);
  add("shape_symmetric", "g(AX,Y)=g(X,AY)", &H::symmetry, samples, 1e-6);
  add("spectrum_closed_form",
      radial ? "principal curvatures {0, lambda(r) x2, beta(r) x2}"
             : "principal curvatures {0, lambda_1..lambda_4 (k,l)}",
      &H::spectrum, samples, 1e-6);
  add("multiplicity_pattern", radial ? "multiplicities 1+2+2" : "five simple principal curvatures",
      &H::multiplicity, samples, 0.0);
  add("distribution_dim_2", "P xi in span{xi, U}", &H::distribution, samples, kDistributionTol);
  add("holomorphic_distribution", "P{U}^perp={U}^perp", &H::holomorphic, samples, 1e-8);
  add("pxi_trichotomy", "P xi in {xi/2-sqrt3/2 U, xi/2+sqrt3/2 U, -xi}", &H::trichotomy, samples,
      kPxiTol);
  add("trace_closed_form", "|trace A| equals the closed-form sum", &H::trace, samples, 1e-6);
  add("structure_vector_derivative", "nabla_X U=phi AX-G(X,xi)", &H::structure, samples, 1e-5);
  add("hopf_lemma", "g((alpha I-A)G(X,xi),Y) lemma for Hopf hypersurfaces", &H::lemma, samples,
      1e-5);
  add("gauss_equation", "Gauss equation", &H::gauss, second_order, 1e-3);
  add("codazzi_equation", "Codazzi equation", &H::codazzi, second_order, 1e-3);
  if (radial) {
    static const char* const class_anchor[3] = {"P xi=xi/2+sqrt3/2 J xi", "P xi=xi/2-sqrt3/2 J xi",
                                                "P xi=-xi"};
    add("pxi_class", class_anchor[pxi_case], &H::pxi_class, samples, kPxiTol);
    add("theta_radius", "r=sqrt3 theta/sqrt(1+2 theta^2)", &H::theta_radius, samples, 1e-6);
    add("theta_curvatures", "lambda, beta in terms of theta; lambda beta=-1/12",
        &H::theta_curvature, samples, 1e-6);
    add("leaf_curvature_s3", "S^3 leaf sectional curvature 3/4", &H::leaf_s3, second_order, 1e-3);
    add("leaf_curvature_s2", "S^2 leaf curvature (1+2 theta^2)/(4 theta^2)", &H::leaf_s2,
        second_order, 1e-3);
    if (r == 1.0) add("minimal", "trace A=0 iff r=1", &H::minimal, samples, 1e-6);
  }

  finish(report, start);
  return report;
}

SuiteReport run_isometry_suite(std::uint64_t seed, int samples) {
  require_samples(samples);
  const auto start = Clock::now();
  Rng rng(seed);
  const IsometryMap f1 = IsometryMap::F1();
  const IsometryMap f2 = IsometryMap::F2();
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;

  MaxResidual pull1, pull2, pullabc, f1j, f1p, f2j, f2p, fabcj, fabcp, num1, num2, numabc;
  for (int s = 0; s < samples; ++s) {
    const AmbientPoint pt = sample_point(rng);
    const TangentVector z = sample_tangent(pt, rng);
    const TangentVector w = sample_tangent(pt, rng);
    const Quaternion a = sample_unit(rng);
    const Quaternion b = sample_unit(rng);
    const Quaternion c = sample_unit(rng);
    const IsometryMap fabc = IsometryMap::Fabc(a, b, c);
    const double gzw = metric_g(pt, z, w);

    const auto pullback = [&](const IsometryMap& f) {
      const AmbientPoint img = f.apply(pt);
      return std::abs(metric_g(img, f.differential(pt, z), f.differential(pt, w)) - gzw);
    };
    pull1.add(pullback(f1));
    pull2.add(pullback(f2));
    pullabc.add(pullback(fabc));

    const AmbientPoint p1 = f1.apply(pt), p2 = f2.apply(pt), pabc = fabc.apply(pt);
    const TangentVector d1 = f1.differential(pt, z);
    const TangentVector d2 = f2.differential(pt, z);
    const TangentVector dabc = fabc.differential(pt, z);
    f1j.add(norm_g(p1, f1.differential(pt, apply_J(pt, z)) + apply_J(p1, d1)));
    f1p.add(norm_g(p1, f1.differential(pt, apply_P(pt, z)) - apply_P(p1, d1)));
    f2j.add(norm_g(p2, f2.differential(pt, apply_J(pt, z)) + apply_J(p2, d2)));
    const TangentVector pd2 = apply_P(p2, d2);
    f2p.add(norm_g(p2, f2.differential(pt, apply_P(pt, z)) -
                           (-0.5 * pd2 + half_sqrt3 * apply_J(p2, pd2))));
    fabcj.add(norm_g(pabc, fabc.differential(pt, apply_J(pt, z)) - apply_J(pabc, dabc)));
    fabcp.add(norm_g(pabc, fabc.differential(pt, apply_P(pt, z)) - apply_P(pabc, dabc)));

    num1.add(euclidean_norm(f1.differential_numeric(pt, z) - d1));
    num2.add(euclidean_norm(f2.differential_numeric(pt, z) - d2));
    numabc.add(euclidean_norm(fabc.differential_numeric(pt, z) - dabc));
  }
  const CompositionReport comp = composition_checks(rng, samples);

  SuiteReport report;
  report.suite = "isometry";
  report.seed = seed;
  auto add = [&](const char* id, const char* anchor, double value, double tol) {
    report.checks.push_back(make_check(id, anchor, samples, value, tol));
  };
  add("F1_metric_pullback", "g(dF1 Z,dF1 W)=g(Z,W)", pull1.value(), 1e-10);
  add("F2_metric_pullback", "g(dF2 Z,dF2 W)=g(Z,W)", pull2.value(), 1e-10);
  add("Fabc_metric_pullback", "g(dFabc Z,dFabc W)=g(Z,W)", pullabc.value(), 1e-10);
  add("F1_J", "dF1 J=-J dF1", f1j.value(), 1e-10);
  add("F1_P", "dF1 P=P dF1", f1p.value(), 1e-10);
  add("F2_J", "dF2 J=-J dF2", f2j.value(), 1e-10);
  add("F2_P", "dF2 P=(-P/2+sqrt3/2 JP) dF2", f2p.value(), 1e-10);
  add("Fabc_J", "dFabc J=J dFabc", fabcj.value(), 1e-10);
  add("Fabc_P", "dFabc P=P dFabc", fabcp.value(), 1e-10);
  add("F1_differential_numeric", "dF1 versus central differences", num1.value(), 1e-6);
  add("F2_differential_numeric", "dF2 versus central differences", num2.value(), 1e-6);
  add("Fabc_differential_numeric", "dFabc versus central differences", numabc.value(), 1e-6);
  add("F1_involution", "F1 o F1=id", comp.f1_involution, 1e-12);
  add("F2_involution", "F2 o F2=id", comp.f2_involution, 1e-12);
  add("Fabc_F1_exchange", "Fabc o F1=F1 o Fbac", comp.fabc_f1_exchange, 1e-12);
  add("Fabc_F2_exchange", "Fabc o F2=F2 o Fcba", comp.fabc_f2_exchange, 1e-12);

  finish(report, start);
  return report;
}

SuiteReport run_all_suites(std::uint64_t seed, int samples) {
  require_samples(samples);
  const auto start = Clock::now();
  SuiteReport all;
  all.suite = "all";
  all.seed = seed;
  auto merge = [&](const SuiteReport& part, const std::string& prefix) {
    for (CheckResult c : part.checks) {
      c.id = prefix + "." + c.id;
      all.checks.push_back(std::move(c));
    }
  };
  merge(run_structure_suite(seed, samples), "structure");
  merge(run_isometry_suite(seed, samples), "isometry");
  const std::pair<Family, FamilyParams> cases[] = {
      {Family::kM1, FamilyParams::radius(0.6)}, {Family::kM1, FamilyParams::radius(1.0)},
      {Family::kM2, FamilyParams::radius(0.6)}, {Family::kM2, FamilyParams::radius(1.0)},
      {Family::kM3, FamilyParams::radius(0.6)}, {Family::kM3, FamilyParams::radius(1.0)},
      {Family::kM4, FamilyParams::torus(0.6, 0.8)}, {Family::kM5, FamilyParams::torus(0.6, 0.8)},
      {Family::kM6, FamilyParams::torus(0.6, 0.8)},
  };
  for (const auto& [family, params] : cases) {
    merge(run_hypersurface_suite(family, params, seed, samples),
          "hypersurface." + params_label(family, params));
  }
  finish(all, start);
  return all;
}

std::string to_json(const SuiteReport& report, int indent) {
  using nlohmann::json;
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json residual = std::isfinite(c.max_residual) ? json(c.max_residual) : json(nullptr);
    checks.push_back({{"id", c.id},
                      {"anchor", c.anchor},
                      {"samples", c.samples},
                      {"max_residual", residual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  const Environment& e = report.environment;
  json doc = {
      {"suite", report.suite},
      {"seed", report.seed},
      {"checks", checks},
      {"duration_ms", report.duration_ms},
      {"environment",
       {{"compiler", e.compiler},
        {"simd_isa", e.simd_isa},
        {"rounding_mode", e.rounding_mode},
        {"flt_eval_method", e.flt_eval_method},
        {"fp_contract_off", e.fp_contract_off},
        {"eigen_version", e.eigen_version}}},
  };
  return doc.dump(indent);
}

}  // namespace nks3
