#include "hblab/harmonic_basis.hpp"

#include <cmath>

#include "hblab/errors.hpp"
#include "hblab/parallel.hpp"

namespace hblab {

namespace {

/// Seed projections u_b = harmonic top component of x^{alpha_b}.
template <class Coeff>
std::vector<Polynomial<Coeff>> seed_projections(int n, int m,
                                                const std::vector<MultiIndex>& seeds) {
  std::vector<Polynomial<Coeff>> u;
  u.reserve(seeds.size());
  for (const auto& a : seeds) {
    u.push_back(harmonic_top_projection(Polynomial<Coeff>::monomial(a, Num<Coeff>::one())));
  }
  (void)n;
  (void)m;
  return u;
}

/// Gram of the seed projections. Because u_b is harmonic and differs from the
/// seed monomial by |x|^2 * P_{m-2}, which is sphere-orthogonal to H_m,
///   <u_a, u_b>_S = <x^{alpha_a}, u_b>_S,
/// a single moment sum per entry.
template <class Coeff>
std::vector<std::vector<Coeff>> seed_gram(const std::vector<MultiIndex>& seeds,
                                          const std::vector<Polynomial<Coeff>>& u,
                                          const SphereMomentTable& table) {
  const std::size_t s = seeds.size();
  std::vector<std::vector<Coeff>> g(s, std::vector<Coeff>(s, Num<Coeff>::zero()));
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a; b < s; ++b) {
      Coeff sum = Num<Coeff>::zero();
      for (const auto& [t, c] : u[b].terms()) {
        MultiIndex at = seeds[a].plus(t);
        if (!at.all_even()) continue;
        sum = sum + c * detail::sphere_moment_as<Coeff>(table, at);
      }
      g[a][b] = sum;
      g[b][a] = sum;
    }
  }
  return g;
}

Integer vector_content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace

template <class Coeff>
PolyD HarmonicBlockBasis<Coeff>::element(int j) const {
  PolyD e = to_double_poly(ortho_[j]);
  double n2 = Num<Coeff>::to_double(norm2_[j]);
  return e.scaled(1.0 / std::sqrt(n2));
}

template <class Coeff>
Coeff HarmonicBlockBasis<Coeff>::ortho_inner(int i, int j) const {
  const auto& vi = coords_[i];
  const auto& vj = coords_[j];
  Coeff sum = Num<Coeff>::zero();
  for (std::size_t a = 0; a < vi.size(); ++a) {
    if (Num<Coeff>::is_zero(vi[a])) continue;
    Coeff row = Num<Coeff>::zero();
    for (std::size_t b = 0; b < vj.size(); ++b) {
      if (Num<Coeff>::is_zero(vj[b])) continue;
      row = row + seed_gram_[a][b] * vj[b];
    }
    sum = sum + vi[a] * row;
  }
  return sum;
}

template <>
HarmonicBlockBasis<Rational> build_block_basis<Rational>(int n, int m,
                                                         const SphereMomentTable& table,
                                                         double pivot) {
  if (n < 2 || m < 0) throw std::invalid_argument("build_block_basis: requires n >= 2, m >= 0");
  if (table.dimension() != n) throw std::invalid_argument("build_block_basis: table dimension");

  const std::vector<MultiIndex> seeds = harmonic_seed_exponents(n, m);
  const long hm = dim_harmonic(n, m);
  if (static_cast<long>(seeds.size()) != hm) {
    throw std::logic_error("build_block_basis: seed count != h_m");
  }
  const std::size_t s = seeds.size();

  auto u = seed_projections<Rational>(n, m, seeds);
  auto gram = seed_gram<Rational>(seeds, u, table);

  // Common denominator so Gram-Schmidt can run fraction-free over integers.
  Integer den = 1;
  for (const auto& row : gram) {
    for (const auto& v : row) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
  }
  std::vector<std::vector<Integer>> gz(s, std::vector<Integer>(s));
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      Rational scaled = gram[a][b] * den;
      if (scaled.get_den() != 1) throw std::logic_error("build_block_basis: lcm failure");
      gz[a][b] = scaled.get_num();
    }
  }

  std::vector<std::vector<Integer>> vecs(s), gv(s);
  std::vector<Integer> normz(s);
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<Integer> w(s, Integer(0));
    w[j] = 1;
    for (std::size_t i = 0; i < j; ++i) {
      Integer t = 0;
      for (std::size_t b = 0; b < s; ++b) {
        if (sgn(w[b]) != 0) t += w[b] * gv[i][b];
      }
      if (sgn(t) == 0) continue;
      for (std::size_t b = 0; b < s; ++b) {
        w[b] = normz[i] * w[b] - t * vecs[i][b];
      }
      Integer content = vector_content(w);
      if (content > 1) {
        for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
      }
    }
    std::vector<Integer> gw(s, Integer(0));
    for (std::size_t a = 0; a < s; ++a) {
      Integer acc = 0;
      for (std::size_t b = 0; b < s; ++b) {
        if (sgn(w[b]) != 0) acc += gz[a][b] * w[b];
      }
      gw[a] = acc;
    }
    Integer nz = 0;
    for (std::size_t b = 0; b < s; ++b) {
      if (sgn(w[b]) != 0) nz += w[b] * gw[b];
    }
    if (sgn(nz) <= 0) throw std::logic_error("build_block_basis: dependent seed in exact mode");
    vecs[j] = std::move(w);
    gv[j] = std::move(gw);
    normz[j] = std::move(nz);
  }

  HarmonicBlockBasis<Rational> basis;
  basis.n_ = n;
  basis.m_ = m;
  basis.gram_tolerance_ = pivot;
  basis.ortho_.reserve(s);
  basis.norm2_.reserve(s);
  basis.coords_.reserve(s);
  for (std::size_t j = 0; j < s; ++j) {
    PolyQ v(n);
    std::vector<Rational> coords(s);
    for (std::size_t b = 0; b < s; ++b) {
      coords[b] = Rational(vecs[j][b]);
      if (sgn(vecs[j][b]) != 0) v += u[b].scaled(coords[b]);
    }
    basis.ortho_.push_back(std::move(v));
    Rational n2(normz[j], den);
    n2.canonicalize();
    basis.norm2_.push_back(std::move(n2));
    basis.coords_.push_back(std::move(coords));
  }
  basis.seed_gram_ = std::move(gram);
  return basis;
}

template <>
HarmonicBlockBasis<double> build_block_basis<double>(int n, int m,
                                                     const SphereMomentTable& table,
                                                     double pivot) {
  if (n < 2 || m < 0) throw std::invalid_argument("build_block_basis: requires n >= 2, m >= 0");
  if (table.dimension() != n) throw std::invalid_argument("build_block_basis: table dimension");

  const std::vector<MultiIndex> seeds = harmonic_seed_exponents(n, m);
  const std::size_t s = seeds.size();
  if (static_cast<long>(s) != dim_harmonic(n, m)) {
    throw std::logic_error("build_block_basis: seed count != h_m");
  }

  auto u = seed_projections<double>(n, m, seeds);
  auto gram = seed_gram<double>(seeds, u, table);

  auto dot_g = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
      if (a[i] == 0.0) continue;
      double row = 0.0;
      for (std::size_t k = 0; k < s; ++k) row += gram[i][k] * b[k];
      sum += a[i] * row;
    }
    return sum;
  };

  // Classical Gram-Schmidt with a second orthogonalization pass.
  std::vector<std::vector<double>> vecs(s);
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<double> w(s, 0.0);
    w[j] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        double t = dot_g(w, vecs[i]);
        for (std::size_t b = 0; b < s; ++b) w[b] -= t * vecs[i][b];
      }
    }
    double n2 = dot_g(w, w);
    if (!(n2 > pivot * pivot)) {
      throw NumericalError(
          "build_block_basis: Gram matrix numerically singular beyond tolerance (n=" +
          std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
    double inv = 1.0 / std::sqrt(n2);
    for (auto& x : w) x *= inv;
    vecs[j] = std::move(w);
  }

  HarmonicBlockBasis<double> basis;
  basis.n_ = n;
  basis.m_ = m;
  basis.gram_tolerance_ = pivot;
  basis.ortho_.reserve(s);
  for (std::size_t j = 0; j < s; ++j) {
    PolyD v(n);
    for (std::size_t b = 0; b < s; ++b) {
      if (vecs[j][b] != 0.0) v += u[b].scaled(vecs[j][b]);
    }
    basis.ortho_.push_back(std::move(v));
    basis.norm2_.push_back(1.0);
    basis.coords_.push_back(std::move(vecs[j]));
  }
  basis.seed_gram_ = std::move(gram);
  return basis;
}

template <class Coeff>
BasisSet<Coeff>::BasisSet(int n, int max_degree, std::shared_ptr<const SphereMomentTable> table,
                          double pivot)
    : n_(n), max_degree_(max_degree), table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("BasisSet: null moment table");
  if (max_degree < 0) throw std::invalid_argument("BasisSet: max_degree must be >= 0");
  blocks_.resize(max_degree + 1);
  parallel_for(0, max_degree + 1, [&](int m) {
    blocks_[m] = build_block_basis<Coeff>(n_, m, *table_, pivot);
  });
}

template <class Coeff>
long BasisSet<Coeff>::total_size(int M) const {
  long total = 0;
  for (int m = 0; m <= M && m <= max_degree_; ++m) total += blocks_[m].size();
  return total;
}

template class HarmonicBlockBasis<Rational>;
template class HarmonicBlockBasis<double>;
template class BasisSet<Rational>;
template class BasisSet<double>;

}  // namespace hblab
