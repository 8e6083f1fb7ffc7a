#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hblab/multi_index.hpp"
#include "hblab/num_traits.hpp"

namespace hblab {

/// Polynomial on R^n as a map from exponent multi-indices to coefficients.
/// Zero-coefficient terms are never stored. Coefficients are exact rationals
/// in oracle mode and doubles in the default runtime mode; harmonic symbols
/// and bases keep rational coefficients until an inner product is evaluated.
template <class Coeff>
class Polynomial {
 public:
  explicit Polynomial(int dimension) : n_(dimension) {
    if (dimension < 1) throw std::invalid_argument("Polynomial: dimension must be >= 1");
  }

  static Polynomial zero(int n) { return Polynomial(n); }
  static Polynomial constant(int n, Coeff c) {
    Polynomial p(n);
    p.add_term(MultiIndex::zero(n), std::move(c));
    return p;
  }
  static Polynomial monomial(const MultiIndex& alpha, Coeff c) {
    Polynomial p(alpha.dimension());
    p.add_term(alpha, std::move(c));
    return p;
  }
  static Polynomial variable(int n, int i) {
    return monomial(MultiIndex::unit(n, i), Num<Coeff>::one());
  }
  /// |x|^2 = x_1^2 + ... + x_n^2.
  static Polynomial radius_squared(int n) {
    Polynomial p(n);
    for (int i = 0; i < n; ++i) p.add_term(MultiIndex::unit(n, i, 2), Num<Coeff>::one());
    return p;
  }

  int dimension() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<MultiIndex, Coeff>& terms() const { return terms_; }

  /// Largest total degree among stored terms; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
    return d;
  }

  /// Present iff all stored terms share one total degree (zero poly: empty).
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [a, c] : terms_) {
      if (!d) {
        d = a.degree();
      } else if (*d != a.degree()) {
        return std::nullopt;
      }
    }
    return d;
  }

  Coeff coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Num<Coeff>::zero() : it->second;
  }

  void add_term(const MultiIndex& alpha, const Coeff& c) {
    if (alpha.dimension() != n_) throw std::invalid_argument("Polynomial: dimension mismatch");
    if (Num<Coeff>::is_zero(c)) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
      terms_.emplace(alpha, c);
    } else {
      it->second = it->second + c;
      if (Num<Coeff>::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_dimension(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_dimension(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
  }
  Polynomial operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r(*this);
    r -= o;
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    require_same_dimension(o);
    Polynomial r(n_);
    for (const auto& [a, ca] : terms_) {
      for (const auto& [b, cb] : o.terms_) {
        r.add_term(a.plus(b), ca * cb);
      }
    }
    return r;
  }
  Polynomial scaled(const Coeff& c) const {
    Polynomial r(n_);
    if (Num<Coeff>::is_zero(c)) return r;
    for (const auto& [a, v] : terms_) r.add_term(a, v * c);
    return r;
  }

  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::map<int, Polynomial> homogeneous_parts() const {
    std::map<int, Polynomial> parts;
    for (const auto& [a, c] : terms_) {
      auto [it, inserted] = parts.try_emplace(a.degree(), n_);
      it->second.add_term(a, c);
    }
    return parts;
  }

  double evaluate(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_) {
      throw std::invalid_argument("Polynomial::evaluate: point dimension mismatch");
    }
    double sum = 0.0;
    for (const auto& [a, c] : terms_) {
      double t = Num<Coeff>::to_double(c);
      for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < a[i]; ++k) t *= x[i];
      }
      sum += t;
    }
    return sum;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [a, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += coeff_str(c);
      for (int i = 0; i < n_; ++i) {
        if (a[i] > 0) {
          s += "*x" + std::to_string(i + 1);
          if (a[i] > 1) s += "^" + std::to_string(a[i]);
        }
      }
    }
    return s;
  }

 private:
  int n_;
  std::map<MultiIndex, Coeff> terms_;

  void require_same_dimension(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Polynomial: dimension mismatch");
  }
  static std::string coeff_str(const Rational& c) { return to_string(c); }
  static std::string coeff_str(double c) { return std::to_string(c); }
};

using PolyQ = Polynomial<Rational>;
using PolyD = Polynomial<double>;

template <class Coeff>
Polynomial<Coeff> laplacian(const Polynomial<Coeff>& p) {
  Polynomial<Coeff> r(p.dimension());
  for (const auto& [a, c] : p.terms()) {
    for (int i = 0; i < p.dimension(); ++i) {
      int e = a[i];
      if (e >= 2) {
        r.add_term(a.lowered(i, 2), c * Num<Coeff>::from_long(static_cast<long>(e) * (e - 1)));
      }
    }
  }
  return r;
}

template <class Coeff>
PolyD to_double_poly(const Polynomial<Coeff>& p) {
  PolyD r(p.dimension());
  for (const auto& [a, c] : p.terms()) r.add_term(a, Num<Coeff>::to_double(c));
  return r;
}

/// JSON form: {"n": int, "terms": [{"alpha": [ints], "num": str, "den": str}]}.
inline nlohmann::json to_json(const PolyQ& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [a, c] : p.terms()) {
    terms.push_back({{"alpha", a.exponents()},
                     {"num", c.get_num().get_str()},
                     {"den", c.get_den().get_str()}});
  }
  return {{"n", p.dimension()}, {"terms", std::move(terms)}};
}

inline PolyQ poly_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw std::invalid_argument("polynomial JSON: missing integer field 'n'");
  }
  PolyQ p(j["n"].get<int>());
  for (const auto& t : j.value("terms", nlohmann::json::array())) {
    MultiIndex a(t.at("alpha").get<std::vector<int>>());
    Rational num = rational_from_string(t.at("num").get<std::string>());
    Rational den = rational_from_string(t.at("den").get<std::string>());
    if (sgn(den) == 0) throw std::invalid_argument("polynomial JSON: zero denominator");
    p.add_term(a, Rational(num / den));
  }
  return p;
}

}  // namespace hblab
