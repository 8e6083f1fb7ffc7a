#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace hblab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "p/q" or a plain integer string.
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("rational_from_string: zero denominator");
  q.canonicalize();
  return q;
}

/// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
  return Rational(x);
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational rational_pow(const Rational& base, unsigned long exp) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return r;
}

/// True iff q >= 0 and both numerator and denominator are perfect squares.
inline bool is_perfect_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

/// Exact square root; precondition is_perfect_square(q).
inline Rational sqrt_exact(const Rational& q) {
  Rational r;
  mpz_sqrt(r.get_num_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(r.get_den_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hblab
