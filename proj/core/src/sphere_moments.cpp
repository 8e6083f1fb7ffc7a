#include "hblab/sphere_moments.hpp"

namespace hblab {

Rational sphere_monomial_moment(int n, const MultiIndex& alpha) {
  if (n < 2) throw std::invalid_argument("sphere_monomial_moment: dimension must be >= 2");
  if (alpha.dimension() != n) {
    throw std::invalid_argument("sphere_monomial_moment: multi-index dimension mismatch");
  }
  if (!alpha.all_even()) return Rational(0);

  // alpha = 2*beta, B = |beta|.
  Integer num = 1;
  Integer den = 1;
  long big = 0;
  for (int i = 0; i < n; ++i) {
    long b = alpha[i] / 2;
    big += b;
    // (2b)! / (4^b b!)
    Integer f2b, fb, p4;
    mpz_fac_ui(f2b.get_mpz_t(), static_cast<unsigned long>(2 * b));
    mpz_fac_ui(fb.get_mpz_t(), static_cast<unsigned long>(b));
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(b));
    num *= f2b;
    den *= fb * p4;
  }
  // * 2^B / prod_{j=0}^{B-1} (n + 2j)
  Integer p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(big));
  num *= p2;
  for (long j = 0; j < big; ++j) den *= Integer(n + 2 * j);

  Rational r(num, den);
  r.canonicalize();
  return r;
}

SphereMomentTable::SphereMomentTable(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("SphereMomentTable: dimension must be >= 2");
}

Rational SphereMomentTable::moment(const MultiIndex& alpha) const {
  if (!alpha.all_even()) return Rational(0);  // common case, skip the cache
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(alpha);
  if (it != cache_.end()) return it->second;
  Rational v = sphere_monomial_moment(n_, alpha);
  cache_.emplace(alpha, v);
  return v;
}

double SphereMomentTable::moment_d(const MultiIndex& alpha) const {
  if (!alpha.all_even()) return 0.0;
  return moment(alpha).get_d();
}

}  // namespace hblab
