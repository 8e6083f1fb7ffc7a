#include "hblab/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace hblab {

void Surd::canonicalize() {
  if (!exact_) return;
  if (sgn(q_) == 0) {
    s_ = 1;
    return;
  }
  if (is_perfect_square(s_)) {
    q_ *= sqrt_exact(s_);
    s_ = 1;
  }
}

Surd Surd::make(Rational q, Rational s) {
  if (sgn(s) < 0) throw std::invalid_argument("Surd::make: negative radicand");
  Surd r;
  r.q_ = std::move(q);
  r.s_ = std::move(s);
  if (sgn(r.s_) == 0) {
    r.q_ = 0;
    r.s_ = 1;
  }
  r.canonicalize();
  return r;
}

Surd Surd::approximate(double v) {
  Surd r;
  r.exact_ = false;
  r.approx_ = v;
  return r;
}

const Rational& Surd::as_rational() const {
  if (!is_rational()) throw std::logic_error("Surd::as_rational: value is not rational");
  return q_;
}

double Surd::value() const {
  if (!exact_) return approx_;
  return to_double(q_) * std::sqrt(to_double(s_));
}

Surd Surd::operator-() const {
  if (!exact_) return approximate(-approx_);
  Surd r = *this;
  r.q_ = -r.q_;
  return r;
}

Surd Surd::operator+(const Surd& o) const {
  if (!exact_ || !o.exact_) return approximate(value() + o.value());
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (s_ == o.s_) {
    Surd r;
    r.q_ = q_ + o.q_;
    r.s_ = s_;
    r.canonicalize();
    return r;
  }
  // q1*sqrt(s1) + q2*sqrt(s2) stays exact iff s2/s1 is a rational square rho^2,
  // in which case it equals (q1 + q2*rho)*sqrt(s1).
  Rational ratio = o.s_ / s_;
  if (is_perfect_square(ratio)) {
    Surd r;
    r.q_ = q_ + o.q_ * sqrt_exact(ratio);
    r.s_ = s_;
    r.canonicalize();
    return r;
  }
  return approximate(value() + o.value());
}

Surd Surd::operator*(const Surd& o) const {
  if (!exact_ || !o.exact_) return approximate(value() * o.value());
  return make(q_ * o.q_, s_ * o.s_);
}

Surd Surd::operator/(const Surd& o) const {
  if (!exact_ || !o.exact_) {
    double d = o.value();
    if (d == 0.0) throw std::domain_error("Surd: division by zero");
    return approximate(value() / d);
  }
  if (o.is_zero()) throw std::domain_error("Surd: division by zero");
  // (q1 sqrt(s1)) / (q2 sqrt(s2)) = q1/(q2 s2) * sqrt(s1 s2)
  return make(q_ / (o.q_ * o.s_), s_ * o.s_);
}

bool Surd::operator==(const Surd& o) const {
  if (exact_ && o.exact_) return q_ == o.q_ && s_ == o.s_;
  return value() == o.value();
}

std::string Surd::str() const {
  if (!exact_) return "~" + std::to_string(approx_);
  if (is_rational()) return to_string(q_);
  return to_string(q_) + "*sqrt(" + to_string(s_) + ")";
}

}  // namespace hblab
