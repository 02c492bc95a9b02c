#pragma once

/*
 * The combinatorial wreath product G = A wr_X B = M x| B, where M = AX is
 * the group of finitely supported functions X -> A and B permutes the
 * coordinates: b o (a.x) = a.(b*x).
 *
 * Everything here is generic over an action backend supplying the point
 * type and the B-action:
 *
 *   struct Backend {
 *     using Point;                       // regular, ordered
 *     using GroupElt;                    // regular
 *     static constexpr bool enumerable;  // finite X?
 *     Point act(const GroupElt&, const Point&) const;
 *     GroupElt identity() const;
 *     GroupElt mul(const GroupElt&, const GroupElt&) const;
 *     GroupElt inv(const GroupElt&) const;
 *   };
 *
 * The two backends in this library are the Baumslag-Solitar coset space
 * (infinite X, BSCosetBackend below) and finite permutation actions
 * (FiniteActionBackend in finite_action.hpp).  Operations that need to
 * enumerate X are constrained to enumerable backends.
 */

#include "wreath/abelian.hpp"
#include "wreath/bs.hpp"

#include <map>

namespace wreath {

struct BSCosetBackend {
  long k = 3;

  using Point = CosetPoint;
  using GroupElt = BSElement;
  static constexpr bool enumerable = false;

  Point act(const GroupElt &g, const Point &x) const { return coset_act(g, x); }
  GroupElt identity() const { return BSElement::identity(k); }
  GroupElt mul(const GroupElt &a, const GroupElt &b) const { return a * b; }
  GroupElt inv(const GroupElt &a) const { return a.inverse(); }
  Point base() const { return base_point(k); }
};

// A finitely supported function X -> A in sorted normal form; zero values
// are never stored, so structural equality is equality in M.
template <class Backend>
class ModuleVector {
public:
  using Point = typename Backend::Point;

  ModuleVector() = default;

  explicit ModuleVector(AbelianSpecPtr spec) : spec_(std::move(spec)) {}

  const AbelianSpecPtr &spec_ptr() const { return spec_; }
  const std::map<Point, AbelianElement> &support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  std::size_t support_size() const { return support_.size(); }

  void add_term(const Point &x, const AbelianElement &a)
  {
    if (a.is_zero())
      return;
    auto it = support_.find(x);
    if (it == support_.end()) {
      support_.emplace(x, a);
      return;
    }
    auto s = it->second + a;
    if (s.is_zero())
      support_.erase(it);
    else
      it->second = std::move(s);
  }

  AbelianElement coeff(const Point &x) const
  {
    auto it = support_.find(x);
    if (it != support_.end())
      return it->second;
    return AbelianElement::zero(spec_);
  }

  ModuleVector operator+(const ModuleVector &o) const
  {
    ModuleVector r = *this;
    for (const auto &[x, a] : o.support_)
      r.add_term(x, a);
    return r;
  }

  ModuleVector operator-() const
  {
    ModuleVector r(spec_);
    for (const auto &[x, a] : support_)
      r.support_.emplace(x, -a);
    return r;
  }

  ModuleVector operator-(const ModuleVector &o) const { return *this + (-o); }

  ModuleVector scaled(const BigInt &n) const
  {
    ModuleVector r(spec_);
    for (const auto &[x, a] : support_)
      r.add_term(x, a.scaled(n));
    return r;
  }

  bool operator==(const ModuleVector &o) const { return support_ == o.support_; }
  bool operator!=(const ModuleVector &o) const { return !(*this == o); }

  std::string str() const
  {
    if (support_.empty())
      return "0";
    std::string s;
    for (const auto &[x, a] : support_) {
      if (!s.empty())
        s += " + ";
      s += a.str() + "." + point_str(x);
    }
    return s;
  }

private:
  static std::string point_str(const CosetPoint &x) { return x.str(); }
  static std::string point_str(int x) { return std::to_string(x); }
  static std::string point_str(long x) { return std::to_string(x); }

  AbelianSpecPtr spec_;
  std::map<Point, AbelianElement> support_;
};

// b o m: relabel the support by b * (-); coefficients are untouched.
template <class Backend>
ModuleVector<Backend> mv_act(const Backend &bk,
                             const typename Backend::GroupElt &b,
                             const ModuleVector<Backend> &m)
{
  ModuleVector<Backend> r(m.spec_ptr());
  for (const auto &[x, a] : m.support())
    r.add_term(bk.act(b, x), a);
  return r;
}

template <class Backend>
struct WreathElement {
  ModuleVector<Backend> mv;
  typename Backend::GroupElt b;

  bool operator==(const WreathElement &o) const
  {
    return b == o.b && mv == o.mv;
  }
  bool operator!=(const WreathElement &o) const { return !(*this == o); }
};

// (m1, b1)(m2, b2) = (m1 + b1 o m2, b1 b2)
template <class Backend>
WreathElement<Backend> wr_mul(const Backend &bk, const WreathElement<Backend> &g,
                              const WreathElement<Backend> &h)
{
  return {g.mv + mv_act(bk, g.b, h.mv), bk.mul(g.b, h.b)};
}

template <class Backend>
WreathElement<Backend> wr_inv(const Backend &bk, const WreathElement<Backend> &g)
{
  auto bi = bk.inv(g.b);
  return {mv_act(bk, bi, -g.mv), bi};
}

template <class Backend>
WreathElement<Backend> wr_identity(const Backend &bk, AbelianSpecPtr spec)
{
  return {ModuleVector<Backend>(std::move(spec)), bk.identity()};
}

// The canonical projection pi : G -> B with kernel M = AX.
template <class Backend>
typename Backend::GroupElt pi(const WreathElement<Backend> &g)
{
  return g.b;
}

} // namespace wreath
