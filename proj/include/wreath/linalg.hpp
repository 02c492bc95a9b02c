#pragma once

/*
 * Dense exact linear algebra over a field context.  A field context F
 * provides Elem, zero/one/from_int, add/sub/mul/neg/inv and is_zero; the
 * instances used here are RationalRing (mpq), ModRing with prime modulus,
 * and the fast machine-word FpField below.
 */

#include "wreath/scalars.hpp"

#include <optional>
#include <vector>

namespace wreath {

// Z/p with machine-word arithmetic, p < 2^31 prime.
struct FpField {
  long p;

  explicit FpField(long prime) : p(prime)
  {
    if (p < 2)
      throw std::invalid_argument("FpField: modulus must be >= 2");
  }

  using Elem = long;
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(const BigInt &n) const
  {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
  }
  Elem from_long(long n) const { return ((n % p) + p) % p; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
  Elem neg(Elem a) const { return (p - a) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem inv(Elem a) const
  {
    long r0 = p, r1 = a % p, s0 = 0, s1 = 1;
    while (r1 != 0) {
      long q = r0 / r1;
      long r2 = r0 - q * r1, s2 = s0 - q * s1;
      r0 = r1; r1 = r2;
      s0 = s1; s1 = s2;
    }
    if (r0 != 1)
      throw std::domain_error("FpField: element not invertible (modulus not prime?)");
    return ((s0 % p) + p) % p;
  }
  std::string str(Elem a) const { return std::to_string(a); }
};

template <class F>
using Mat = std::vector<std::vector<typename F::Elem>>;

template <class F>
Mat<F> zero_matrix(const F &f, std::size_t rows, std::size_t cols)
{
  return Mat<F>(rows, std::vector<typename F::Elem>(cols, f.zero()));
}

template <class F>
Mat<F> identity_matrix(const F &f, std::size_t n)
{
  auto m = zero_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = f.one();
  return m;
}

template <class F>
Mat<F> mat_mul(const F &f, const Mat<F> &a, const Mat<F> &b)
{
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  auto r = zero_matrix(f, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (f.is_zero(a[i][l]))
        continue;
      for (std::size_t j = 0; j < m; ++j)
        r[i][j] = f.add(r[i][j], f.mul(a[i][l], b[l][j]));
    }
  return r;
}

// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(const F &f, Mat<F> &m)
{
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && f.is_zero(m[pr][c]))
      ++pr;
    if (pr == rows)
      continue;
    std::swap(m[pr], m[r]);
    auto piv = f.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j)
      m[r][j] = f.mul(m[r][j], piv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || f.is_zero(m[i][c]))
        continue;
      auto factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F &f, Mat<F> m)
{
  return rref(f, m).size();
}

// Basis of the right nullspace of m.
template <class F>
Mat<F> nullspace(const F &f, Mat<F> m)
{
  std::size_t cols = m.empty() ? 0 : m[0].size();
  auto pivots = rref(f, m);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots)
    is_pivot[c] = 1;

  Mat<F> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<typename F::Elem> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of A x = b, if any.
template <class F>
std::optional<std::vector<typename F::Elem>>
solve(const F &f, Mat<F> a, const std::vector<typename F::Elem> &b)
{
  std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  for (std::size_t i = 0; i < rows; ++i)
    a[i].push_back(b[i]);
  auto pivots = rref(f, a);
  if (!pivots.empty() && pivots.back() == cols)
    return std::nullopt; // pivot in the augmented column: inconsistent
  std::vector<typename F::Elem> x(cols, f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = a[r][cols];
  return x;
}

} // namespace wreath
