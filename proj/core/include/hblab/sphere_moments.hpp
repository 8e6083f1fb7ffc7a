#pragma once

#include <map>
#include <mutex>

#include "hblab/polynomial.hpp"

namespace hblab {

/// Integral of the monomial zeta^alpha over the unit sphere against the
/// normalized O(n)-invariant surface measure. Zero when any exponent is odd;
/// otherwise an exact rational from the Gamma-function identity
///   prod_i (2 b_i)! / (4^{b_i} b_i!)  *  2^B / prod_{j<B} (n + 2j),
/// where alpha = 2*beta and B = |beta|.
Rational sphere_monomial_moment(int n, const MultiIndex& alpha);

/// Caching table of sphere monomial moments for one ambient dimension.
/// Thread-safe; values are immutable once computed.
class SphereMomentTable {
 public:
  explicit SphereMomentTable(int n);

  int dimension() const { return n_; }
  Rational moment(const MultiIndex& alpha) const;
  double moment_d(const MultiIndex& alpha) const;

 private:
  int n_;
  mutable std::mutex mutex_;
  mutable std::map<MultiIndex, Rational> cache_;
};

namespace detail {
template <class Coeff>
Coeff sphere_moment_as(const SphereMomentTable& t, const MultiIndex& a);
template <>
inline Rational sphere_moment_as<Rational>(const SphereMomentTable& t, const MultiIndex& a) {
  return t.moment(a);
}
template <>
inline double sphere_moment_as<double>(const SphereMomentTable& t, const MultiIndex& a) {
  return t.moment_d(a);
}
}  // namespace detail

/// L^2(S, sigma) inner product of two real polynomials via monomial moments.
template <class Coeff>
Coeff sphere_inner_product(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q,
                           const SphereMomentTable& table) {
  if (p.dimension() != q.dimension() || p.dimension() != table.dimension()) {
    throw std::invalid_argument("sphere_inner_product: dimension mismatch");
  }
  Coeff sum = Num<Coeff>::zero();
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      MultiIndex ab = a.plus(b);
      if (!ab.all_even()) continue;
      sum = sum + ca * cb * detail::sphere_moment_as<Coeff>(table, ab);
    }
  }
  return sum;
}

}  // namespace hblab
