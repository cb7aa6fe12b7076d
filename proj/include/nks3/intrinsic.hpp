#pragma once

// Intrinsic geometry of a metric given on a coordinate chart: Christoffel
// symbols and Riemann tensor by central differences of the metric.

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace nks3 {

using MetricField = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

// gamma[c](a, b) = Gamma^c_{ab}; first derivatives of the metric use
// central differences with the given step.
std::vector<Eigen::MatrixXd> christoffel(const MetricField& metric, const Eigen::VectorXd& u,
                                         double step);

class ChartCurvature {
 public:
  // Riemann tensor at u; derivatives of the Christoffel symbols are central
  // differences of christoffel() with the same step.
  ChartCurvature(const MetricField& metric, const Eigen::VectorXd& u, double step);

  int dim() const { return n_; }
  const std::vector<Eigen::MatrixXd>& gamma() const { return gamma_; }
  const Eigen::MatrixXd& metric() const { return metric_; }

  // R(d_a, d_b) d_c = R^d_{cab} d_d.
  double component(int d, int c, int a, int b) const {
    return riemann_[((d * n_ + c) * n_ + a) * n_ + b];
  }

  // R(X,Y)Z for coordinate vectors, R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
  Eigen::VectorXd apply(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                        const Eigen::VectorXd& z) const;

  // g(R(X,Y)Y, X) / (|X|^2 |Y|^2 - g(X,Y)^2).
  double sectional(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

 private:
  int n_;
  Eigen::MatrixXd metric_;
  std::vector<Eigen::MatrixXd> gamma_;
  std::vector<double> riemann_;
};

}  // namespace nks3
