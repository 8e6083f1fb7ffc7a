#pragma once

#include <string>

#include "hblab/rational.hpp"

namespace hblab {

/// Exact scalar of the form q * sqrt(s) with rational q and rational s >= 0.
///
/// This is the value type of matrix entries in rational mode: inner products
/// of orthogonalized basis elements are rational multiples of a single square
/// root. Products stay exact; sums of commensurable radicals stay exact; a sum
/// that would mix incommensurable radicals downgrades the value to a
/// double-precision approximation and records the loss in exact().
class Surd {
 public:
  Surd() : q_(0), s_(1) {}
  Surd(Rational q) : q_(std::move(q)), s_(1) {}  // NOLINT: implicit by design
  Surd(long v) : q_(v), s_(1) {}                 // NOLINT

  /// q * sqrt(s); requires s >= 0.
  static Surd make(Rational q, Rational s);
  static Surd sqrt(const Rational& s) { return make(Rational(1), s); }
  static Surd approximate(double v);

  bool exact() const { return exact_; }
  bool is_rational() const { return exact_ && s_ == 1; }
  /// Requires is_rational().
  const Rational& as_rational() const;
  const Rational& rational_part() const { return q_; }
  const Rational& radicand() const { return s_; }
  double value() const;
  bool is_zero() const { return exact_ ? sgn(q_) == 0 : approx_ == 0.0; }

  Surd operator-() const;
  Surd operator+(const Surd& o) const;
  Surd operator-(const Surd& o) const { return *this + (-o); }
  Surd operator*(const Surd& o) const;
  Surd operator/(const Surd& o) const;

  /// Exact equality when both sides are exact; bitwise double equality otherwise.
  bool operator==(const Surd& o) const;
  bool operator!=(const Surd& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Rational q_;
  Rational s_;
  double approx_ = 0.0;
  bool exact_ = true;

  void canonicalize();
};

}  // namespace hblab
