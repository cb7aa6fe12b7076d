#pragma once

// Hypersurface apparatus for immersions M^5 -> S^3 x S^3: unit normal,
// structure vector U = -J xi, almost contact structure (phi, eta), shape
// operator, spectral report, and residuals of the hypersurface identities.
//
// All ambient vectors are frame coefficients (see frame.hpp). Tangent vectors
// of M are 5-vectors of coefficients in the g-orthonormal tangent frame
// stored in HypersurfacePointData::tangent_frame unless noted otherwise.

#include <span>
#include <string_view>
#include <vector>

#include "nks3/frame.hpp"
#include "nks3/immersion.hpp"

namespace nks3 {

class NotApplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat65 = Eigen::Matrix<double, 6, 5>;

// How the ambient derivative of the normal is evaluated.
enum class NormalDerivative {
  // Central differences of xi in R^8, projected (Euclidean connection), then
  // corrected to the nearly Kaehler connection.
  kEuclidean,
  // Central differences of the frame coefficients of xi plus the connection
  // tables.
  kFrameCoefficients,
};

enum class Orientation {
  // det[pushforward | xi] > 0 in frame coefficients.
  kChart,
  // Chart orientation, negated when that makes the eigenvalue of largest
  // magnitude positive; kept when the extreme eigenvalues tie in magnitude.
  kLargestPositive,
};

struct AnalyzeOptions {
  Orientation orientation = Orientation::kLargestPositive;
  // Negates xi after the orientation convention is applied.
  bool flip_normal = false;
  double step = 1e-5;
  NormalDerivative route = NormalDerivative::kEuclidean;
};

// Smallest Gram eigenvalue accepted for the pushforward.
inline constexpr double kMinGramEigenvalue = 1e-6;

struct HypersurfacePointData {
  ChartCoords coords;
  AmbientPoint point;
  // Columns: frame coefficients of d f(d/du_a).
  Mat65 pushforward;
  // Columns: g-orthonormal tangent frame t_1..t_5; equals pushforward * chart_to_frame.
  Mat65 tangent_frame;
  Mat5 chart_to_frame;
  FrameVector xi;
  FrameVector U;
  double alpha = 0.0;
  // phi(i, j) = g(phi t_j, t_i); eta(i) = g(t_i, U).
  Mat5 phi;
  Vec5 eta;
  // Shape operator A(i, j) = g(A t_j, t_i), as computed (not symmetrized).
  Mat5 A;

  // Ambient vector of tangent coefficients.
  FrameVector ambient(const Vec5& x) const { return tangent_frame * x; }
  // Tangential part of an ambient vector, in tangent coefficients.
  Vec5 tangential(const FrameVector& v) const;
  // U in tangent coefficients.
  Vec5 structure_vector() const { return eta; }
  Mat5 shape_symmetric() const { return 0.5 * (A + A.transpose()); }
  // max |g(At_i, t_j) - g(t_i, At_j)|.
  double symmetry_residual() const { return (A - A.transpose()).cwiseAbs().maxCoeff(); }
  // |AU - alpha U|_g.
  double hopf_residual() const;
  // Shape operator as a (1,1) tensor in chart coordinates.
  Mat5 shape_in_chart() const;
};

// Unit normal at u in chart orientation: g-orthogonal to the pushforward with
// det[pushforward | xi] > 0 in frame coefficients (negated on request).
FrameVector unit_normal(const Immersion& m, const ChartCoords& u, bool flip = false);

// Throws DegenerateImmersion when the pushforward Gram matrix has an
// eigenvalue below kMinGramEigenvalue.
HypersurfacePointData analyze_point(const Immersion& m, const ChartCoords& u,
                                    const AnalyzeOptions& options = {});

enum class PxiClass { kPlus, kMinus, kReflect, kOther };

std::string_view pxi_class_name(PxiClass c);

struct SpectralReport {
  std::vector<double> eigenvalues;  // ascending
  Mat5 eigenvectors;                // columns, tangent coefficients
  std::vector<int> multiplicities;  // per cluster, ascending eigenvalue order
  std::vector<double> cluster_values;
  double alpha = 0.0;
  double hopf_residual = 0.0;
  double trace = 0.0;
  double mean_curvature = 0.0;
  int dim_D = 4;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  // |g(J X1, X2)| on the 2-dimensional eigenspace of largest |eigenvalue|;
  // absent when there is none.
  std::optional<double> theta;
};

inline constexpr double kClusterRelTol = 1e-6;
inline constexpr double kClusterAbsFloor = 1e-9;
inline constexpr double kDistributionTol = 1e-6;
inline constexpr double kPxiTol = 1e-6;

// Groups sorted values whose consecutive gap is at most
// max(kClusterRelTol * max|value|, kClusterAbsFloor). Returns cluster sizes.
std::vector<int> cluster_sorted(const std::vector<double>& sorted);

SpectralReport spectral_report(const HypersurfacePointData& data);

// Throws NotApplicable when dim D = 4.
PxiClass classify_P_xi(const HypersurfacePointData& data);
PxiClass classify_P_xi(const SpectralReport& report);

// max over x of |eta(P x)| for x orthogonal to U (checked on a basis of U^perp).
double holomorphic_preservation_residual(const HypersurfacePointData& data);

// | nabla_X U - phi A X + G(X, xi) |_g with nabla_X U the tangential part of
// the ambient derivative of U (same differencing route as the shape operator).
// Uses the orientation of `data`.
double structure_vector_residual(const Immersion& m, const HypersurfacePointData& data,
                                 const Vec5& x, const AnalyzeOptions& options = {});

// Lemma residual for Hopf hypersurfaces; X, Y orthogonal to U.
// Throws PreconditionError when |eta(X)| or |eta(Y)| exceeds 1e-8 or the
// point is not Hopf (residual above 1e-6).
double hopf_lemma_residual(const HypersurfacePointData& data, const Vec5& x, const Vec5& y);

// The Gauss and Codazzi residuals are independent of the normal orientation;
// only options.step and options.route are used.

// Gauss equation residual |R(X,Y)Z - rhs|_g with R from the induced metric.
double gauss_residual(const Immersion& m, const ChartCoords& u, const Vec5& x, const Vec5& y,
                      const Vec5& z, const AnalyzeOptions& options = {}, double step = 1e-4);

// Codazzi equation residual |(nabla_X A)Y - (nabla_Y A)X - rhs|_g.
double codazzi_residual(const Immersion& m, const ChartCoords& u, const Vec5& x, const Vec5& y,
                        const AnalyzeOptions& options = {}, double step = 1e-4);

// Sectional curvature of M on the plane of two chart-coordinate vectors.
double sectional_curvature(const Immersion& m, const ChartCoords& u, const Vec5& x_chart,
                           const Vec5& y_chart, double step = 1e-4);

// Intrinsic sectional curvature of the leaf obtained by varying only the
// listed chart coordinates, on the plane of x and y (leaf-coordinate vectors).
// For the examples, coords {0,1,2} is the S^3 leaf and {3,4} the second leaf.
double leaf_sectional_curvature(const Immersion& m, const ChartCoords& u,
                                std::span<const int> coords, const Eigen::VectorXd& x,
                                const Eigen::VectorXd& y, double step = 1e-4);

struct ThetaConsistency {
  double theta = 0.0;
  // |r - sqrt3 theta / sqrt(1 + 2 theta^2)|
  double radius_residual = 0.0;
  // max mismatch of {|lambda|, |beta|} against the theta formulas.
  double curvature_residual = 0.0;
  // lambda * beta from the theta formulas (exactly -1/12).
  double product = 0.0;
};

// m1..m3 only. Throws NotApplicable for other families and DegenerateImmersion
// when no 2-dimensional eigenspace is found.
ThetaConsistency theta_r_consistency(const Immersion& m, const ChartCoords& u);

// Closed-form principal curvatures for the examples (sorted ascending):
// m1..m3: {0, lambda, lambda, beta, beta}; m4..m6: {0, l1, l2, l3, l4}.
std::vector<double> closed_form_spectrum(Family f, const FamilyParams& params);

// Smallest max-abs difference between sorted spectra, allowing one global sign.
double spectrum_distance_up_to_sign(std::vector<double> computed, std::vector<double> expected);

}  // namespace nks3
