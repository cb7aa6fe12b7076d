#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nks3/hypersurface.hpp"

using namespace nks3;

namespace {

// Principal curvatures evaluated in 30-digit arithmetic (mpmath) from the
// closed-form expressions for the examples; frozen here as the oracle.
struct RadialOracle {
  double r, lambda, beta, theta;
};
constexpr RadialOracle kRadial[] = {
    {0.3, -0.025994616777200256, 3.2057919548336858, 0.17864740025262410},
    {0.6, -0.059816490590112259, 1.3931498239234456, 0.39735970711951314},
    {0.9, -0.13463505775469970, 0.61895716259255232, 0.76613087768287373},
    {1.0, -0.28867513459481288, 0.28867513459481288, 1.0},
};

struct TorusOracle {
  double k, l;
  double values[4];
};
const TorusOracle kTorus[] = {
    {0.6, 0.8, {-0.098242362150022801, 0.84824236215002280, -1.3931498239234456, 0.059816490590112259}},
    {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2,
     {-0.077350269189625765, 1.0773502691896258, -1.0773502691896258, 0.077350269189625765}},
};

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<double> radial_spectrum(const RadialOracle& o) {
  return sorted({0.0, o.lambda, o.lambda, o.beta, o.beta});
}

std::vector<double> torus_spectrum(const TorusOracle& o) {
  return sorted({0.0, o.values[0], o.values[1], o.values[2], o.values[3]});
}

// Cyclic Jacobi rotations; independent of the library's eigensolver.
std::vector<double> jacobi_eigenvalues(Mat5 a) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 5; ++p) {
      for (int q = p + 1; q < 5; ++q) off += a(p, q) * a(p, q);
    }
    if (off < 1e-30) break;
    for (int p = 0; p < 5; ++p) {
      for (int q = p + 1; q < 5; ++q) {
        if (a(p, q) == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
        for (int k = 0; k < 5; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < 5; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(5);
  for (int i = 0; i < 5; ++i) ev[i] = a(i, i);
  return sorted(ev);
}

Vec5 random_vec5(Rng& rng) {
  std::normal_distribution<double> n;
  Vec5 v;
  for (int i = 0; i < 5; ++i) v(i) = n(rng);
  return v;
}

constexpr Family kRadialFamilies[] = {Family::kM1, Family::kM2, Family::kM3};
constexpr Family kTorusFamilies[] = {Family::kM4, Family::kM5, Family::kM6};

}  // namespace

TEST(ClosedForm, FormulasMatchOracle) {
  for (Family f : kRadialFamilies) {
    for (const auto& o : kRadial) {
      EXPECT_LE(spectrum_distance_up_to_sign(closed_form_spectrum(f, FamilyParams::radius(o.r)),
                                             radial_spectrum(o)),
                1e-14);
    }
  }
  for (Family f : kTorusFamilies) {
    for (const auto& o : kTorus) {
      EXPECT_LE(spectrum_distance_up_to_sign(closed_form_spectrum(f, FamilyParams::torus(o.k, o.l)),
                                             torus_spectrum(o)),
                1e-14);
    }
  }
  EXPECT_NEAR(kRadial[3].beta, std::sqrt(3.0) / 6.0, 1e-16);
}

TEST(ClosedForm, SpectrumDistance) {
  EXPECT_EQ(spectrum_distance_up_to_sign({1, 2, 3}, {-3, -2, -1}), 0.0);
  EXPECT_NEAR(spectrum_distance_up_to_sign({1, 2}, {1, 2.5}), 0.5, 1e-15);
  EXPECT_TRUE(std::isinf(spectrum_distance_up_to_sign({1, 2}, {1})));
}

TEST(Clustering, ScaledTolerance) {
  EXPECT_EQ(cluster_sorted({-1.0, -1.0 + 1e-9, 0.0, 2.0, 2.0}), (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(cluster_sorted({0.0, 1e-3, 2e-3}), (std::vector<int>{1, 1, 1}));
  // Gap 1e-5 against scale 100: inside 1e-6 * 100.
  EXPECT_EQ(cluster_sorted({1.0, 1.0 + 1e-5, 100.0}), (std::vector<int>{2, 1}));
  EXPECT_EQ(cluster_sorted({1e-12, 2e-12}), (std::vector<int>{2}));
}

class RadialSpectrum : public ::testing::TestWithParam<std::tuple<Family, int>> {};

TEST_P(RadialSpectrum, MatchesOracleAtRandomPoints) {
  const auto [family, index] = GetParam();
  const RadialOracle& o = kRadial[index];
  const Immersion m = make_example(family, FamilyParams::radius(o.r));
  Rng rng(100 + index);
  for (int s = 0; s < 10; ++s) {
    const HypersurfacePointData d = analyze_point(m, m.sample_coords(rng));
    const SpectralReport rep = spectral_report(d);
    EXPECT_LE(spectrum_distance_up_to_sign(rep.eigenvalues, radial_spectrum(o)), 1e-6);
    EXPECT_LE(spectrum_distance_up_to_sign(jacobi_eigenvalues(d.shape_symmetric()),
                                           rep.eigenvalues),
              1e-12);
    EXPECT_LE(rep.hopf_residual, 1e-6);
    EXPECT_NEAR(rep.alpha, 0.0, 1e-6);
    EXPECT_EQ(rep.dim_D, 2);
    if (o.r < 1.0) {
      // Largest-magnitude eigenvalue made positive: {lambda x2, 0, beta x2}.
      EXPECT_EQ(rep.multiplicities, (std::vector<int>{2, 1, 2}));
      EXPECT_NEAR(rep.eigenvalues[4], o.beta, 1e-6);
      ASSERT_TRUE(rep.theta.has_value());
      EXPECT_NEAR(*rep.theta, o.theta, 1e-6);
      EXPECT_GE(std::abs(rep.trace), 0.1);
    } else {
      EXPECT_NEAR(rep.trace, 0.0, 1e-6);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Examples, RadialSpectrum,
                         ::testing::Combine(::testing::ValuesIn(kRadialFamilies),
                                            ::testing::Values(0, 1, 2, 3)));

TEST(TorusSpectrum, MatchesOracleAtRandomPoints) {
  Rng rng(55);
  for (Family f : kTorusFamilies) {
    for (const auto& o : kTorus) {
      const Immersion m = make_example(f, FamilyParams::torus(o.k, o.l));
      for (int s = 0; s < 10; ++s) {
        const SpectralReport rep = spectral_report(analyze_point(m, m.sample_coords(rng)));
        EXPECT_LE(spectrum_distance_up_to_sign(rep.eigenvalues, torus_spectrum(o)), 1e-6)
            << family_name(f);
        EXPECT_EQ(rep.multiplicities, (std::vector<int>{1, 1, 1, 1, 1}));
        EXPECT_LE(rep.hopf_residual, 1e-6);
        EXPECT_NEAR(rep.alpha, 0.0, 1e-6);
        EXPECT_EQ(rep.dim_D, 2);
        EXPECT_FALSE(rep.theta.has_value());
      }
    }
  }
}

TEST(PxiClass, Trichotomy) {
  Rng rng(21);
  const PxiClass expected[] = {PxiClass::kPlus, PxiClass::kMinus, PxiClass::kReflect};
  const double h = std::sqrt(3.0) / 2.0;
  for (int i = 0; i < 3; ++i) {
    for (double r : {0.3, 0.6, 1.0}) {
      const Immersion m = make_example(kRadialFamilies[i], FamilyParams::radius(r));
      const SpectralReport rep = spectral_report(analyze_point(m, m.sample_coords(rng)));
      EXPECT_EQ(classify_P_xi(rep), expected[i]);
      EXPECT_NEAR(rep.a, i == 2 ? -1.0 : 0.5, 1e-6);
      EXPECT_NEAR(rep.b, i == 0 ? -h : (i == 1 ? h : 0.0), 1e-6);
    }
  }
  EXPECT_EQ(pxi_class_name(PxiClass::kPlus), "PLUS");
  EXPECT_EQ(pxi_class_name(PxiClass::kReflect), "REFLECT");
}

TEST(PxiClass, CoefficientsAreUnit) {
  Rng rng(22);
  for (Family f : {Family::kM1, Family::kM2, Family::kM3, Family::kM4, Family::kM5, Family::kM6}) {
    const FamilyParams p = uses_radius(f) ? FamilyParams::radius(0.7) : FamilyParams::torus(0.6, 0.8);
    const Immersion m = make_example(f, p);
    for (int s = 0; s < 5; ++s) {
      const SpectralReport rep = spectral_report(analyze_point(m, m.sample_coords(rng)));
      EXPECT_GE(rep.c, 0.0);
      EXPECT_NEAR(rep.a * rep.a + rep.b * rep.b + rep.c * rep.c, 1.0, 1e-8) << family_name(f);
    }
  }
}

TEST(PxiClass, NotApplicableForFourDimensionalD) {
  SpectralReport rep;
  rep.dim_D = 4;
  EXPECT_THROW(classify_P_xi(rep), NotApplicable);
  rep.dim_D = 2;
  rep.a = 0.1;
  EXPECT_EQ(classify_P_xi(rep), PxiClass::kOther);
}

TEST(Normal, FrameAndContactStructure) {
  const StructureTables& t = tables();
  Rng rng(31);
  for (Family f : {Family::kM1, Family::kM3, Family::kM5}) {
    const Immersion m = make_example(
        f, uses_radius(f) ? FamilyParams::radius(0.7) : FamilyParams::torus(0.6, 0.8));
    const HypersurfacePointData d = analyze_point(m, m.sample_coords(rng));
    EXPECT_NEAR(t.metric(d.xi, d.xi), 1.0, 1e-12);
    for (int a = 0; a < 5; ++a) EXPECT_NEAR(t.metric(d.xi, d.pushforward.col(a)), 0.0, 1e-12);
    const Mat5 gram = d.tangent_frame.transpose() * t.g * d.tangent_frame;
    EXPECT_LE((gram - Mat5::Identity()).norm(), 1e-12);
    EXPECT_LE((d.U + t.J * d.xi).norm(), 1e-15);
    EXPECT_NEAR(d.eta.norm(), 1.0, 1e-12);
    // phi^2 = -I + eta eta^T and phi U = 0.
    EXPECT_LE((d.phi * d.phi + Mat5::Identity() - d.eta * d.eta.transpose()).norm(), 1e-12);
    EXPECT_LE((d.phi * d.eta).norm(), 1e-12);
    EXPECT_LE(d.symmetry_residual(), 1e-6);
  }
}

TEST(Normal, FlipNegatesSpectrum) {
  Rng rng(41);
  for (Family f : {Family::kM2, Family::kM4}) {
    const Immersion m = make_example(
        f, uses_radius(f) ? FamilyParams::radius(0.6) : FamilyParams::torus(0.6, 0.8));
    const ChartCoords u = m.sample_coords(rng);
    AnalyzeOptions flipped;
    flipped.flip_normal = true;
    const HypersurfacePointData a = analyze_point(m, u), b = analyze_point(m, u, flipped);
    EXPECT_LE((a.xi + b.xi).norm(), 0.0);
    EXPECT_LE((a.A + b.A).norm(), 0.0);
    const SpectralReport ra = spectral_report(a), rb = spectral_report(b);
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(ra.eigenvalues[i], -rb.eigenvalues[4 - i], 1e-12);
    // a and b are orientation invariant.
    EXPECT_NEAR(ra.a, rb.a, 1e-15);
    EXPECT_NEAR(ra.b, rb.b, 1e-15);
  }
}

TEST(Normal, ChartOrientationIsDeterminantPositive) {
  const Immersion m = make_example(Family::kM1, FamilyParams::radius(0.6));
  const ChartCoords u = ChartCoords::Constant(0.1);
  const FrameVector xi = unit_normal(m, u);
  Mat6 frame;
  const HypersurfacePointData d = analyze_point(m, u);
  frame << d.pushforward, xi;
  EXPECT_GT(frame.determinant(), 0.0);
  EXPECT_LE((unit_normal(m, u, true) + xi).norm(), 0.0);
}

TEST(Normal, DifferencingRoutesAgree) {
  Rng rng(51);
  AnalyzeOptions frame_route;
  frame_route.route = NormalDerivative::kFrameCoefficients;
  for (Family f : {Family::kM1, Family::kM3, Family::kM4, Family::kM6}) {
    const Immersion m = make_example(
        f, uses_radius(f) ? FamilyParams::radius(0.6) : FamilyParams::torus(0.6, 0.8));
    const ChartCoords u = m.sample_coords(rng);
    const HypersurfacePointData a = analyze_point(m, u), b = analyze_point(m, u, frame_route);
    EXPECT_LE((a.A - b.A).cwiseAbs().maxCoeff(), 1e-7) << family_name(f);
  }
}

TEST(Normal, ImageUnderF1MatchesDirectAnalysis) {
  // Push the m1 normal through dF1 and compare with the m2 normal, then
  // compare spectra.
  Rng rng(61);
  const FamilyParams p = FamilyParams::radius(0.6);
  const Immersion m1 = make_example(Family::kM1, p), m2 = make_example(Family::kM2, p);
  const IsometryMap f1 = IsometryMap::F1();
  for (int s = 0; s < 10; ++s) {
    const ChartCoords u = m1.sample_coords(rng);
    const HypersurfacePointData d1 = analyze_point(m1, u), d2 = analyze_point(m2, u);
    const FrameVector pushed =
        to_frame(d2.point, f1.differential(d1.point, to_tangent(d1.point, d1.xi)));
    EXPECT_LE(std::min((pushed - d2.xi).norm(), (pushed + d2.xi).norm()), 1e-12);
    EXPECT_LE(spectrum_distance_up_to_sign(spectral_report(d1).eigenvalues,
                                           spectral_report(d2).eigenvalues),
              1e-8);
  }
}

TEST(Normal, DegenerateChartPointThrows) {
  const Immersion m = make_example(Family::kM1, FamilyParams::radius(0.6));
  ChartCoords u = ChartCoords::Zero();
  u(1) = std::numbers::pi / 4;
  EXPECT_THROW(analyze_point(m, u), DegenerateImmersion);
}

TEST(Identities, HypersurfaceResiduals) {
  Rng rng(71);
  for (Family f : {Family::kM1, Family::kM2, Family::kM3, Family::kM4, Family::kM5, Family::kM6}) {
    const Immersion m = make_example(
        f, uses_radius(f) ? FamilyParams::radius(0.6) : FamilyParams::torus(0.6, 0.8));
    for (int s = 0; s < 3; ++s) {
      const ChartCoords u = m.sample_coords(rng);
      const HypersurfacePointData d = analyze_point(m, u);
      const Vec5 x = random_vec5(rng), y = random_vec5(rng), z = random_vec5(rng);
      EXPECT_LE(structure_vector_residual(m, d, x), 1e-5) << family_name(f);
      EXPECT_LE(gauss_residual(m, u, x, y, z), 1e-3) << family_name(f);
      EXPECT_LE(codazzi_residual(m, u, x, y), 1e-3) << family_name(f);
      EXPECT_LE(holomorphic_preservation_residual(d), 1e-8);
      const Vec5 xp = x - d.eta * d.eta.dot(x), yp = y - d.eta * d.eta.dot(y);
      EXPECT_LE(hopf_lemma_residual(d, xp, yp), 1e-5) << family_name(f);
    }
  }
}

TEST(Identities, TrivialCases) {
  Rng rng(72);
  const Immersion m = make_example(Family::kM1, FamilyParams::radius(0.6));
  const ChartCoords u = m.sample_coords(rng);
  const Vec5 x = random_vec5(rng), z = random_vec5(rng);
  EXPECT_LE(codazzi_residual(m, u, x, x), 1e-12);
  EXPECT_LE(gauss_residual(m, u, x, x, z), 1e-12);

  // X = Y in a lambda-eigenspace orthogonal to U.
  const HypersurfacePointData d = analyze_point(m, u);
  const SpectralReport rep = spectral_report(d);
  const Vec5 e = rep.eigenvectors.col(0);
  EXPECT_LE(std::abs(e.dot(d.eta)), 1e-8);
  EXPECT_LE(hopf_lemma_residual(d, e, e), 1e-5);
}

TEST(Identities, LemmaPreconditions) {
  const Immersion m = make_example(Family::kM1, FamilyParams::radius(0.6));
  const HypersurfacePointData d = analyze_point(m, ChartCoords::Constant(0.2));
  EXPECT_THROW(hopf_lemma_residual(d, d.eta, d.eta), PreconditionError);

  HypersurfacePointData broken = d;
  broken.A(0, 1) += 0.1;
  broken.A(1, 0) += 0.1;
  const Vec5 x = Vec5::Unit(2) - d.eta * d.eta(2);
  if (broken.hopf_residual() > 1e-6) {
    EXPECT_THROW(hopf_lemma_residual(broken, x, x), PreconditionError);
  }
}

TEST(Intrinsic, LeafCurvatures) {
  Rng rng(81);
  const int s3[3] = {0, 1, 2}, s2[2] = {3, 4};
  for (Family f : kRadialFamilies) {
    for (double r : {0.6, 0.9}) {
      const Immersion m = make_example(f, FamilyParams::radius(r));
      const ChartCoords u = m.sample_coords(rng);
      Eigen::VectorXd x(3), y(3);
      x << 1.0, 0.2, -0.5;
      y << 0.1, 1.0, 0.7;
      EXPECT_NEAR(leaf_sectional_curvature(m, u, s3, x, y), 0.75, 1e-3);
      const double theta2 = r * r / (3.0 - 2.0 * r * r);
      EXPECT_NEAR(leaf_sectional_curvature(m, u, s2, Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)),
                  (1.0 + 2.0 * theta2) / (4.0 * theta2), 1e-3);
    }
  }
  const Immersion m = make_example(Family::kM1, FamilyParams::radius(0.6));
  EXPECT_THROW(leaf_sectional_curvature(m, ChartCoords::Zero(), s2, Eigen::Vector3d::Ones(),
                                        Eigen::Vector2d::Ones()),
               std::invalid_argument);
}

TEST(Intrinsic, SectionalCurvatureIsSymmetricInPlane) {
  const Immersion m = make_example(Family::kM4, FamilyParams::torus(0.6, 0.8));
  const ChartCoords u = ChartCoords::Constant(0.3);
  const Vec5 x = Vec5::Unit(0), y = Vec5::Unit(3);
  EXPECT_NEAR(sectional_curvature(m, u, x, y), sectional_curvature(m, u, y, x), 1e-9);
  EXPECT_NEAR(sectional_curvature(m, u, x, y), sectional_curvature(m, u, 2.0 * x, x + y), 1e-6);
}

TEST(Theta, RadiusRelation) {
  Rng rng(91);
  for (const auto& o : kRadial) {
    const Immersion m = make_example(Family::kM1, FamilyParams::radius(o.r));
    const ThetaConsistency tc = theta_r_consistency(m, m.sample_coords(rng));
    EXPECT_NEAR(tc.theta, o.theta, 1e-6);
    EXPECT_LE(tc.radius_residual, 1e-6);
    EXPECT_LE(tc.curvature_residual, 1e-6);
    EXPECT_NEAR(tc.product, -1.0 / 12.0, 1e-8);
  }
  const Immersion torus = make_example(Family::kM4, FamilyParams::torus(0.6, 0.8));
  EXPECT_THROW(theta_r_consistency(torus, ChartCoords::Zero()), NotApplicable);
}
