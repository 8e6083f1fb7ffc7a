#pragma once

#include <cmath>

#include "hblab/rational.hpp"
#include "hblab/surd.hpp"

namespace hblab {

/// Uniform arithmetic over the two coefficient types of the library:
/// exact rationals (oracle mode) and doubles (default runtime mode).
/// EntryType is the scalar type of assembled matrix entries, which involve a
/// single square root per entry in rational mode.
template <class C>
struct Num;

template <>
struct Num<Rational> {
  using EntryType = Surd;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational from_long(long v) { return Rational(v); }
  static double to_double(const Rational& v) { return v.get_d(); }
  static Rational abs(const Rational& v) { return ::abs(v); }
  static Rational div_long(const Rational& v, long d) { return Rational(v / d); }
  /// v / sqrt(d) as an exact surd: (v/d) * sqrt(d).
  static Surd div_sqrt(const Rational& v, const Rational& d) {
    return Surd::make(v / d, d);
  }
};

template <>
struct Num<double> {
  using EntryType = double;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double v) { return v == 0.0; }
  static double from_rational(const Rational& q) { return q.get_d(); }
  static double from_long(long v) { return static_cast<double>(v); }
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::abs(v); }
  static double div_long(double v, long d) { return v / static_cast<double>(d); }
  static double div_sqrt(double v, double d) { return v / std::sqrt(d); }
};

}  // namespace hblab
