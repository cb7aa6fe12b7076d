#include "nks3/intrinsic.hpp"

namespace nks3 {

std::vector<Eigen::MatrixXd> christoffel(const MetricField& metric, const Eigen::VectorXd& u,
                                         double step) {
  const Eigen::Index n = u.size();
  const Eigen::MatrixXd h = metric(u);
  // dh[c](a, b) = d_c h_ab
  std::vector<Eigen::MatrixXd> dh(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::VectorXd up = u, dn = u;
    up(c) += step;
    dn(c) -= step;
    dh[c] = (metric(up) - metric(dn)) / (2.0 * step);
  }
  const Eigen::MatrixXd h_inv = h.inverse();
  std::vector<Eigen::MatrixXd> gamma(n, Eigen::MatrixXd::Zero(n, n));
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      Eigen::VectorXd lowered(n);
      for (Eigen::Index d = 0; d < n; ++d) {
        lowered(d) = 0.5 * (dh[a](b, d) + dh[b](a, d) - dh[d](a, b));
      }
      const Eigen::VectorXd raised = h_inv * lowered;
      for (Eigen::Index c = 0; c < n; ++c) gamma[c](a, b) = raised(c);
    }
  }
  return gamma;
}

ChartCurvature::ChartCurvature(const MetricField& metric, const Eigen::VectorXd& u, double step)
    : n_(static_cast<int>(u.size())), metric_(metric(u)), gamma_(christoffel(metric, u, step)) {
  const int n = n_;
  // dgamma[a][c](b, e) = d_a Gamma^c_{be}
  std::vector<std::vector<Eigen::MatrixXd>> dgamma(n);
  for (int a = 0; a < n; ++a) {
    Eigen::VectorXd up = u, dn = u;
    up(a) += step;
    dn(a) -= step;
    const auto gp = christoffel(metric, up, step);
    const auto gm = christoffel(metric, dn, step);
    dgamma[a].resize(n);
    for (int c = 0; c < n; ++c) dgamma[a][c] = (gp[c] - gm[c]) / (2.0 * step);
  }
  riemann_.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  for (int d = 0; d < n; ++d) {
    for (int c = 0; c < n; ++c) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          double v = dgamma[a][d](b, c) - dgamma[b][d](a, c);
          for (int e = 0; e < n; ++e) {
            v += gamma_[d](a, e) * gamma_[e](b, c) - gamma_[d](b, e) * gamma_[e](a, c);
          }
          riemann_[((d * n + c) * n + a) * n + b] = v;
        }
      }
    }
  }
}

Eigen::VectorXd ChartCurvature::apply(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                      const Eigen::VectorXd& z) const {
  Eigen::VectorXd r = Eigen::VectorXd::Zero(n_);
  for (int d = 0; d < n_; ++d) {
    double v = 0.0;
    for (int c = 0; c < n_; ++c) {
      for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) v += component(d, c, a, b) * x(a) * y(b) * z(c);
      }
    }
    r(d) = v;
  }
  return r;
}

double ChartCurvature::sectional(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  const double num = x.dot(metric_ * apply(x, y, y));
  const double xx = x.dot(metric_ * x), yy = y.dot(metric_ * y), xy = x.dot(metric_ * y);
  return num / (xx * yy - xy * xy);
}

}  // namespace nks3
