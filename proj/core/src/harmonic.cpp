#include "hblab/harmonic.hpp"

namespace hblab {

namespace {

void enumerate_rec(int slots, int degree, std::vector<int>& prefix,
                   std::vector<MultiIndex>& out) {
  if (slots == 1) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = degree; a >= 0; --a) {
    prefix.push_back(a);
    enumerate_rec(slots - 1, degree - a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> monomial_exponents(int n, int degree) {
  if (n < 1 || degree < 0) throw std::invalid_argument("monomial_exponents: bad arguments");
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  enumerate_rec(n, degree, prefix, out);
  return out;
}

std::vector<MultiIndex> harmonic_seed_exponents(int n, int degree) {
  std::vector<MultiIndex> all = monomial_exponents(n, degree);
  std::vector<MultiIndex> out;
  for (const auto& a : all) {
    if (a[n - 1] <= 1) out.push_back(a);
  }
  return out;
}

long dim_harmonic(int n, int m) {
  if (n < 2 || m < 0) throw std::invalid_argument("dim_harmonic: requires n >= 2, m >= 0");
  if (m == 0) return 1;
  if (m == 1) return n;
  auto binom = [](long a, long b) -> long {
    if (a < b || b < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r.get_si();
  };
  return binom(n + m - 1, n - 1) - binom(n + m - 3, n - 1);
}

template <class Coeff>
Polynomial<Coeff> harmonic_top_projection(const Polynomial<Coeff>& p) {
  if (p.is_zero()) return p;
  auto deg = p.homogeneous_degree();
  if (!deg) throw std::invalid_argument("harmonic_top_projection: input must be homogeneous");
  const int m = *deg;
  const int n = p.dimension();
  if (m <= 1) return p;

  Polynomial<Coeff> result = p;
  Polynomial<Coeff> lap = laplacian(p);
  const Polynomial<Coeff> r2 = Polynomial<Coeff>::radius_squared(n);
  Polynomial<Coeff> r2pow = r2;
  Coeff c = Num<Coeff>::one();
  for (int j = 1; 2 * j <= m && !lap.is_zero(); ++j) {
    const long denom = 2L * j * (2L * m + n - 2 - 2L * j);
    c = Num<Coeff>::div_long(-c, denom);
    result += (r2pow * lap).scaled(c);
    if (2 * (j + 1) <= m) {
      lap = laplacian(lap);
      r2pow = r2pow * r2;
    }
  }
  return result;
}

template <class Coeff>
std::vector<Polynomial<Coeff>> harmonic_decompose(const Polynomial<Coeff>& p) {
  const int n = p.dimension();
  if (p.is_zero()) return {p};
  auto deg = p.homogeneous_degree();
  if (!deg) throw std::invalid_argument("harmonic_decompose: input must be homogeneous");
  const int k = *deg;
  if (k <= 1) return {p};

  std::vector<Polynomial<Coeff>> out;
  out.push_back(harmonic_top_projection(p));
  std::vector<Polynomial<Coeff>> rest = harmonic_decompose(laplacian(p));
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const long l = static_cast<long>(i) + 1;
    const long scale = 2 * l * (n - 2 + 2L * k - 2 * l);
    out.push_back(rest[i].scaled(Num<Coeff>::div_long(Num<Coeff>::one(), scale)));
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

template Polynomial<Rational> harmonic_top_projection<Rational>(const Polynomial<Rational>&);
template Polynomial<double> harmonic_top_projection<double>(const Polynomial<double>&);
template std::vector<Polynomial<Rational>> harmonic_decompose<Rational>(
    const Polynomial<Rational>&);
template std::vector<Polynomial<double>> harmonic_decompose<double>(const Polynomial<double>&);

}  // namespace hblab
