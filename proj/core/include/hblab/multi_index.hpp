#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hblab {

/// Exponent multi-index of a monomial x^alpha on R^n.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int v : e_) {
      if (v < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    }
    if (e_.empty()) throw std::invalid_argument("MultiIndex: empty exponent list");
  }
  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex unit(int n, int i, int power = 1) {
    std::vector<int> e(n, 0);
    e.at(i) = power;
    return MultiIndex(std::move(e));
  }

  int dimension() const { return static_cast<int>(e_.size()); }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  MultiIndex plus(const MultiIndex& o) const {
    require_same_dimension(o);
    std::vector<int> e(e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
    return MultiIndex(std::move(e));
  }
  /// alpha - k*e_i; requires the result to stay non-negative.
  MultiIndex lowered(int i, int k) const {
    std::vector<int> e(e_);
    if (e.at(i) < k) throw std::invalid_argument("MultiIndex::lowered: negative result");
    e[i] -= k;
    return MultiIndex(std::move(e));
  }
  bool all_even() const {
    for (int v : e_) {
      if (v % 2 != 0) return false;
    }
    return true;
  }

  auto operator<=>(const MultiIndex&) const = default;

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> e_;

  void require_same_dimension(const MultiIndex& o) const {
    if (e_.size() != o.e_.size()) {
      throw std::invalid_argument("MultiIndex: dimension mismatch");
    }
  }
};

/// All exponent vectors with |alpha| = degree in descending lexicographic
/// order: (degree,0,...,0) first, (0,...,0,degree) last.
std::vector<MultiIndex> monomial_exponents(int n, int degree);

/// The subfamily with last exponent <= 1, in the same descending order.
/// The harmonic projections of these monomials are a basis of the space of
/// degree-`degree` harmonic homogeneous polynomials; they are exactly the
/// monomials a greedy independence scan over the full list would keep.
std::vector<MultiIndex> harmonic_seed_exponents(int n, int degree);

}  // namespace hblab
