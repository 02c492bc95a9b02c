#pragma once

/*
 * The metabelian Baumslag-Solitar group B = BS(1,k) = <h, t | t^-1 h t = h^k>
 * in normal form, and its coset space X = B/H for H = <h>.
 *
 * B embeds in Z[1/k] x| Z: an element is a pair (a, n) with a in Z[1/k],
 * n in Z, multiplying by
 *
 *     (a, n) (b, m) = (a + k^-n b, n + m).
 *
 * Under this law t = (0, 1), h = (1, 0), and the defining relation holds;
 * fractional powers h^q = (q, 0) for q in Z[1/k] make sense and are what the
 * conjugates t^-j h t^j produce.  H = <h> is the set of (z, 0) with z in Z.
 *
 * A left coset (a, n) H = { (a + k^-n z, n) : z in Z } is determined by the
 * level n together with the fractional part of k^n a, which gives the
 * canonical CosetPoint below.  The base point v is the coset of the
 * identity, and stab_B(v) = H.
 */

#include "wreath/scalars.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wreath {

class BSElement {
public:
  BSElement() : a_(2), n_(0) {}

  BSElement(LocalizedInt a, long long n) : a_(std::move(a)), n_(n) {}

  static BSElement identity(long k) { return BSElement(LocalizedInt(k), 0); }
  static BSElement h0(long k) { return BSElement(LocalizedInt(k, 1), 0); }
  static BSElement t(long k) { return BSElement(LocalizedInt(k), 1); }
  // h^q for q in Z[1/k]
  static BSElement h_power(LocalizedInt q) { return BSElement(std::move(q), 0); }

  long base() const { return a_.base(); }
  const LocalizedInt &a() const { return a_; }
  long long n() const { return n_; }

  bool is_identity() const { return n_ == 0 && a_.is_zero(); }

  BSElement operator*(const BSElement &o) const
  {
    return BSElement(a_ + o.a_.shifted(static_cast<long>(-n_)), n_ + o.n_);
  }

  BSElement inverse() const
  {
    return BSElement((-a_).shifted(static_cast<long>(n_)), -n_);
  }

  BSElement pow(long long e) const
  {
    BSElement base = e >= 0 ? *this : inverse();
    long long m = e >= 0 ? e : -e;
    BSElement r = identity(this->base());
    for (long long i = 0; i < m; ++i)
      r = r * base;
    return r;
  }

  bool operator==(const BSElement &o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const BSElement &o) const { return !(*this == o); }

  std::string str() const
  {
    return "(" + a_.str() + ", " + std::to_string(n_) + ")";
  }

private:
  LocalizedInt a_;
  long long n_;
};

inline BSElement bs_mul(const BSElement &g, const BSElement &h) { return g * h; }

// Canonical representative of a coset in X = B/H: the level n and the
// fractional part of k^n a, which lies in [0,1) and determines the coset.
struct CosetPoint {
  long long level = 0;
  LocalizedInt residue;

  CosetPoint() = default;
  CosetPoint(long long lvl, LocalizedInt res)
  : level(lvl), residue(std::move(res))
  {}

  bool operator==(const CosetPoint &o) const
  {
    return level == o.level && residue == o.residue;
  }
  bool operator!=(const CosetPoint &o) const { return !(*this == o); }
  bool operator<(const CosetPoint &o) const
  {
    if (level != o.level)
      return level < o.level;
    return residue < o.residue;
  }

  std::string str() const
  {
    return "(" + std::to_string(level) + ", " + residue.str() + ")";
  }
};

inline CosetPoint base_point(long k)
{
  return CosetPoint(0, LocalizedInt(k));
}

inline CosetPoint coset_canonical(const BSElement &g)
{
  return CosetPoint(g.n(), g.a().shifted(static_cast<long>(g.n())).frac());
}

// One representative of x, namely (k^-level residue, level).
inline BSElement coset_representative(const CosetPoint &x)
{
  return BSElement(x.residue.shifted(static_cast<long>(-x.level)), x.level);
}

inline CosetPoint coset_act(const BSElement &g, const CosetPoint &x)
{
  return coset_canonical(g * coset_representative(x));
}

inline bool in_H(const BSElement &g)
{
  return g.n() == 0 && g.a().is_integer();
}

// Word syntax: whitespace-separated tokens  h  h^-1  t  t^-1  h^{p/q}
// with q a power of k (h^{p} is accepted for integer powers).  Tokens are
// folded left to right into normal form.
BSElement parse_bs_word(const std::string &word, long k);

} // namespace wreath
