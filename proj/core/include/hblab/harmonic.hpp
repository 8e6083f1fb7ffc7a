#pragma once

#include <vector>

#include "hblab/polynomial.hpp"

namespace hblab {

/// Dimension of the space of harmonic homogeneous polynomials of degree m
/// on R^n: h_0 = 1, h_1 = n, h_m = C(n+m-1, n-1) - C(n+m-3, n-1).
long dim_harmonic(int n, int m);

/// Harmonic component of top degree of a homogeneous polynomial, via the
/// projection  h = sum_j c_j |x|^{2j} (Delta^j p)  with
/// c_0 = 1, c_j = -c_{j-1} / (2j (2m + n - 2 - 2j)).
/// The result differs from p by an element of |x|^2 * P_{m-2}, so it is the
/// top component of the unique decomposition p = sum_j |x|^{2j} h_{m-2j}.
template <class Coeff>
Polynomial<Coeff> harmonic_top_projection(const Polynomial<Coeff>& p);

/// Full decomposition [h_k, h_{k-2}, ...] of a homogeneous polynomial of
/// degree k, with p = sum_j |x|^{2j} h_{k-2j}. Interior zero components are
/// kept; trailing zero components are dropped. Lower components come from the
/// recursion on Delta p, whose decomposition is the scaled tail
/// Delta p = sum_{l>=1} 2l(n - 2 + 2k - 2l) |x|^{2(l-1)} h_{k-2l}.
template <class Coeff>
std::vector<Polynomial<Coeff>> harmonic_decompose(const Polynomial<Coeff>& p);

}  // namespace hblab
