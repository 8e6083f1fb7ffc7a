#pragma once

#include <vector>

namespace hblab {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre rule on [a, b]; exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int n, double a, double b);

/// Gauss-Jacobi rule on [0, 1] for the weight (1-t)^alpha * t^beta,
/// alpha, beta > -1. Weights carry the full weight-function mass.
QuadratureRule gauss_jacobi01(int n, double alpha, double beta);

/// Quadrature points on the unit sphere of R^n (n in {2,3,4}) with weights
/// summing to 1 (sigma is a probability measure). `resolution` controls the
/// azimuthal count; polar directions use Gauss-Legendre in the cosine.
/// Trigonometric-polynomial integrands of matching degree are integrated to
/// machine precision.
struct SphereRule {
  std::vector<std::vector<double>> points;
  std::vector<double> weights;
  std::size_t size() const { return points.size(); }
};
SphereRule sphere_rule(int n, int resolution);

/// Deterministic point set on the sphere used for sampling boundary symbols:
/// equispaced on the circle for n=2, a Fibonacci-lattice design-style grid for
/// n=3, and a product grid for n=4.
std::vector<std::vector<double>> sphere_sample_grid(int n, int count);

}  // namespace hblab
