#pragma once

#include <memory>
#include <vector>

#include "hblab/harmonic.hpp"
#include "hblab/sphere_moments.hpp"

namespace hblab {

/// Version tag of the deterministic basis convention; recorded in manifests
/// and operator bundles so that golden values stay comparable.
inline constexpr const char* kBasisConvention = "hblab-basis-v1";

/// Orthogonal basis of the harmonic block H_m, built deterministically:
/// seed monomials x^alpha with |alpha| = m and alpha_n <= 1 in descending
/// lexicographic order (exactly the monomials a greedy independence scan over
/// all degree-m monomials keeps), each replaced by its harmonic component of
/// top degree, then Gram-Schmidt in that order against the L^2(S, sigma)
/// inner product.
///
/// Elements are stored unnormalized together with their exact squared sphere
/// norms; the orthonormal element is ortho(j) / sqrt(norm2(j)). In rational
/// mode the stored data is exact; in float mode the elements are already
/// unit-norm and norm2(j) == 1.
template <class Coeff>
class HarmonicBlockBasis {
 public:
  int dimension() const { return n_; }
  int block_degree() const { return m_; }
  int size() const { return static_cast<int>(ortho_.size()); }
  double gram_tolerance() const { return gram_tolerance_; }

  const Polynomial<Coeff>& ortho(int j) const { return ortho_[j]; }
  const Coeff& norm2(int j) const { return norm2_[j]; }

  /// Normalized element as a double-coefficient polynomial.
  PolyD element(int j) const;

  /// Exact/float inner product of raw elements i and j, evaluated through the
  /// construction Gram matrix (bilinearity in seed coordinates).
  Coeff ortho_inner(int i, int j) const;

 private:
  int n_ = 0;
  int m_ = 0;
  double gram_tolerance_ = 0.0;
  std::vector<Polynomial<Coeff>> ortho_;
  std::vector<Coeff> norm2_;
  // Construction data kept for coordinate-route exact checks.
  std::vector<std::vector<Coeff>> coords_;        // per element, over seeds
  std::vector<std::vector<Coeff>> seed_gram_;     // Gram of seed projections

  template <class C>
  friend HarmonicBlockBasis<C> build_block_basis(int, int, const SphereMomentTable&, double);
};

/// Builds the degree-m block basis. Float mode applies the pivot threshold to
/// Gram-Schmidt residual norms and reports ill-conditioning as a
/// NumericalError; in rational mode dependence cannot occur.
template <class Coeff>
HarmonicBlockBasis<Coeff> build_block_basis(int n, int m, const SphereMomentTable& table,
                                            double pivot = 1e-8);

/// Block bases for all degrees 0..max_degree, shared across operators.
template <class Coeff>
class BasisSet {
 public:
  BasisSet(int n, int max_degree, std::shared_ptr<const SphereMomentTable> table,
           double pivot = 1e-8);

  int dimension() const { return n_; }
  int max_degree() const { return max_degree_; }
  const HarmonicBlockBasis<Coeff>& block(int m) const { return blocks_.at(m); }
  const SphereMomentTable& moments() const { return *table_; }
  std::shared_ptr<const SphereMomentTable> moments_ptr() const { return table_; }

  /// Sum of block sizes for degrees 0..M.
  long total_size(int M) const;

 private:
  int n_;
  int max_degree_;
  std::shared_ptr<const SphereMomentTable> table_;
  std::vector<HarmonicBlockBasis<Coeff>> blocks_;
};

using BasisSetQ = BasisSet<Rational>;
using BasisSetD = BasisSet<double>;

}  // namespace hblab
