#include "hblab/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hblab/errors.hpp"

namespace hblab {

namespace {

/// Golub-Welsch: nodes and weights from the symmetric tridiagonal Jacobi
/// matrix of the three-term recurrence (alpha_k diagonal, sqrt(beta_k) off
/// diagonal); weights are mu0 * (first eigenvector component)^2.
QuadratureRule golub_welsch(const std::vector<double>& alpha, const std::vector<double>& beta,
                            double mu0) {
  const int n = static_cast<int>(alpha.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) J(i, i) = alpha[i];
  for (int i = 1; i < n; ++i) {
    double b = std::sqrt(beta[i]);
    J(i, i - 1) = b;
    J(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw NumericalError("golub_welsch: eigensolver failed");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v * v;
  }
  return rule;
}

/// Jacobi weight (1-x)^a (1+x)^b on [-1, 1].
QuadratureRule gauss_jacobi_sym(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: need at least one node");
  if (a <= -1.0 || b <= -1.0) throw std::invalid_argument("gauss_jacobi: parameters must be > -1");
  std::vector<double> alpha(n), beta(n, 0.0);
  const double ab = a + b;
  alpha[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    double d = 2.0 * k + ab;
    alpha[k] = (b * b - a * a) / (d * (d + 2.0));
  }
  if (n > 1) beta[1] = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
  for (int k = 2; k < n; ++k) {
    double d = 2.0 * k + ab;
    beta[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) / (d * d * (d + 1.0) * (d - 1.0));
  }
  double mu0 = std::pow(2.0, ab + 1.0) *
               std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  return golub_welsch(alpha, beta, mu0);
}

}  // namespace

QuadratureRule gauss_legendre(int n, double a, double b) {
  QuadratureRule base = gauss_jacobi_sym(n, 0.0, 0.0);
  QuadratureRule rule;
  rule.nodes.resize(base.size());
  rule.weights.resize(base.size());
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < base.size(); ++i) {
    rule.nodes[i] = mid + half * base.nodes[i];
    rule.weights[i] = half * base.weights[i];
  }
  return rule;
}

QuadratureRule gauss_jacobi01(int n, double alpha, double beta) {
  QuadratureRule base = gauss_jacobi_sym(n, alpha, beta);
  // x in [-1,1] -> t = (x+1)/2; (1-x)^a (1+x)^b dx = 2^{a+b+1} (1-t)^a t^b dt.
  QuadratureRule rule;
  rule.nodes.resize(base.size());
  rule.weights.resize(base.size());
  const double scale = std::pow(2.0, -(alpha + beta + 1.0));
  for (std::size_t i = 0; i < base.size(); ++i) {
    rule.nodes[i] = 0.5 * (base.nodes[i] + 1.0);
    rule.weights[i] = scale * base.weights[i];
  }
  return rule;
}

SphereRule sphere_rule(int n, int resolution) {
  if (resolution < 4) resolution = 4;
  SphereRule rule;
  const double pi = std::numbers::pi;
  if (n == 2) {
    // Trapezoid rule in the angle: exact for trigonometric polynomials of
    // degree < resolution.
    rule.points.reserve(resolution);
    rule.weights.assign(resolution, 1.0 / resolution);
    for (int k = 0; k < resolution; ++k) {
      double th = 2.0 * pi * k / resolution;
      rule.points.push_back({std::cos(th), std::sin(th)});
    }
    return rule;
  }
  if (n == 3) {
    // Gauss-Legendre in cos(theta) x trapezoid in phi; sigma normalized.
    int nt = resolution / 2 + 1;
    QuadratureRule gl = gauss_legendre(nt, -1.0, 1.0);
    for (int i = 0; i < nt; ++i) {
      double c = gl.nodes[i];
      double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      for (int k = 0; k < resolution; ++k) {
        double ph = 2.0 * pi * k / resolution;
        rule.points.push_back({s * std::cos(ph), s * std::sin(ph), c});
        rule.weights.push_back(gl.weights[i] / (2.0 * resolution));
      }
    }
    return rule;
  }
  if (n == 4) {
    // x = (cos psi, sin psi cos th, sin psi sin th cos ph, sin psi sin th sin ph)
    // dsigma ~ sin^2(psi) sin(th) dpsi dth dph; Gauss-Legendre in psi (with the
    // sin^2 factor carried explicitly), Gauss-Legendre in cos(th), trapezoid
    // in ph. Normalization: integral of sin^2 over [0,pi] is pi/2, total mass
    // 2 pi^2 handled by dividing by it.
    int np = resolution / 2 + 1;
    QuadratureRule glp = gauss_legendre(np, 0.0, pi);
    QuadratureRule glc = gauss_legendre(np, -1.0, 1.0);
    const double total = 2.0 * pi * pi;
    for (int i = 0; i < np; ++i) {
      double psi = glp.nodes[i];
      double wpsi = glp.weights[i] * std::sin(psi) * std::sin(psi);
      for (int j = 0; j < np; ++j) {
        double c = glc.nodes[j];
        double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int k = 0; k < resolution; ++k) {
          double ph = 2.0 * pi * k / resolution;
          rule.points.push_back({std::cos(psi), std::sin(psi) * c, std::sin(psi) * s * std::cos(ph),
                                 std::sin(psi) * s * std::sin(ph)});
          rule.weights.push_back(wpsi * glc.weights[j] * (2.0 * pi / resolution) / total);
        }
      }
    }
    return rule;
  }
  throw std::invalid_argument("sphere_rule: product rules implemented for n in {2,3,4}");
}

std::vector<std::vector<double>> sphere_sample_grid(int n, int count) {
  const double pi = std::numbers::pi;
  std::vector<std::vector<double>> pts;
  if (n == 2) {
    if (count <= 0) count = 720;
    pts.reserve(count);
    for (int k = 0; k < count; ++k) {
      double th = 2.0 * pi * k / count;
      pts.push_back({std::cos(th), std::sin(th)});
    }
    return pts;
  }
  if (n == 3) {
    if (count <= 0) count = 2562;
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    pts.reserve(count);
    for (int k = 0; k < count; ++k) {
      double z = 1.0 - (2.0 * k + 1.0) / count;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double ph = 2.0 * pi * k / golden;
      pts.push_back({r * std::cos(ph), r * std::sin(ph), z});
    }
    return pts;
  }
  if (n == 4) {
    if (count <= 0) count = 4096;
    int res = std::max(4, static_cast<int>(std::round(std::cbrt(static_cast<double>(count)))));
    SphereRule rule = sphere_rule(4, res);
    return rule.points;
  }
  throw std::invalid_argument("sphere_sample_grid: implemented for n in {2,3,4}");
}

}  // namespace hblab
