#pragma once

/*
 * B-equivariant endomorphisms of V = Ind_H^B(K) = K[B/H] for the
 * Baumslag-Solitar group B = BS(1, m+1), H = <h>, over K = Q or Z/N.
 *
 * V is infinite dimensional, but an equivariant endomorphism phi is
 * determined by w = phi(v) where v is the base coset: phi(b.v) = b.w.
 * This is well defined exactly when w is H-invariant, and since H = <h>
 * a single check h.w = w suffices.
 *
 * The maps of interest are
 *
 *     alpha(v) = t.v        and        beta(v) = (sum_{0<=j<=m} h^j) t^-1.v
 *
 * which satisfy alpha beta = (m+1) id while beta alpha has base-point image
 * of support size m+1, so (1/(m+1)) alpha is a left inverse of beta that is
 * not a right inverse: End_{KB}(V) is not directly finite.  Scaling by the
 * coefficient 1/(m+1) requires m+1 invertible in K; over K = Z/m it is 1.
 *
 * theta is the counterexample endomorphism of G = Z/m wr_X B: identity on
 * B and (1/(m+1)) alpha on M.  It is surjective with an explicit preimage
 * map, and not injective with an explicit kernel witness.
 */

#include "wreath/wreath.hpp"

#include <vector>

namespace wreath {

// A finite K-linear combination of coset points, sorted, zeros dropped.
template <class Ring>
class CosetVector {
public:
  using Elem = typename Ring::Elem;

  explicit CosetVector(Ring ring) : ring_(std::move(ring)) {}

  const Ring &ring() const { return ring_; }
  const std::map<CosetPoint, Elem> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  void add_term(const CosetPoint &x, const Elem &c)
  {
    if (ring_.is_zero(c))
      return;
    auto it = terms_.find(x);
    if (it == terms_.end()) {
      terms_.emplace(x, c);
      return;
    }
    auto s = ring_.add(it->second, c);
    if (ring_.is_zero(s))
      terms_.erase(it);
    else
      it->second = std::move(s);
  }

  CosetVector operator+(const CosetVector &o) const
  {
    CosetVector r = *this;
    for (const auto &[x, c] : o.terms_)
      r.add_term(x, c);
    return r;
  }

  CosetVector operator-(const CosetVector &o) const
  {
    CosetVector r = *this;
    for (const auto &[x, c] : o.terms_)
      r.add_term(x, ring_.neg(c));
    return r;
  }

  CosetVector scaled(const Elem &c) const
  {
    CosetVector r(ring_);
    for (const auto &[x, v] : terms_)
      r.add_term(x, ring_.mul(v, c));
    return r;
  }

  CosetVector acted(const BSElement &g) const
  {
    CosetVector r(ring_);
    for (const auto &[x, c] : terms_)
      r.add_term(coset_act(g, x), c);
    return r;
  }

  bool operator==(const CosetVector &o) const { return terms_ == o.terms_; }
  bool operator!=(const CosetVector &o) const { return !(*this == o); }

  std::string str() const
  {
    if (terms_.empty())
      return "0";
    std::string s;
    for (const auto &[x, c] : terms_) {
      if (!s.empty())
        s += " + ";
      s += ring_.str(c) + "." + x.str();
    }
    return s;
  }

private:
  Ring ring_;
  std::map<CosetPoint, Elem> terms_;
};

template <class Ring>
bool endo_check_invariant(long k, const CosetVector<Ring> &w)
{
  return w.acted(BSElement::h0(k)) == w;
}

template <class Ring>
class InducedEndo {
public:
  InducedEndo(long k, CosetVector<Ring> w) : k_(k), w_(std::move(w))
  {
    if (!endo_check_invariant(k_, w_))
      throw std::invalid_argument(
          "InducedEndo: image of the base point is not H-invariant");
  }

  static InducedEndo identity(long k, const Ring &ring)
  {
    CosetVector<Ring> w(ring);
    w.add_term(base_point(k), ring.one());
    return InducedEndo(k, std::move(w));
  }

  // alpha(v) = t.v
  static InducedEndo alpha(long k, const Ring &ring)
  {
    CosetVector<Ring> w(ring);
    w.add_term(coset_canonical(BSElement::t(k)), ring.one());
    return InducedEndo(k, std::move(w));
  }

  // beta(v) = (sum_{0<=j<=m} h^j) t^-1.v, with m = k - 1
  static InducedEndo beta(long k, const Ring &ring)
  {
    CosetVector<Ring> w(ring);
    BSElement ti = BSElement::t(k).inverse();
    for (long j = 0; j < k; ++j) {
      BSElement rep = BSElement::h_power(LocalizedInt(k, j)) * ti;
      w.add_term(coset_canonical(rep), ring.one());
    }
    return InducedEndo(k, std::move(w));
  }

  long k() const { return k_; }
  const CosetVector<Ring> &w() const { return w_; }
  const Ring &ring() const { return w_.ring(); }

  // Equivariant extension: u = sum c_x x  |->  sum c_x (rep(x).w).
  CosetVector<Ring> apply(const CosetVector<Ring> &u) const
  {
    CosetVector<Ring> r(ring());
    for (const auto &[x, c] : u.terms())
      r = r + w_.acted(coset_representative(x)).scaled(c);
    return r;
  }

  InducedEndo scaled(const typename Ring::Elem &c) const
  {
    return InducedEndo(k_, w_.scaled(c));
  }

  bool operator==(const InducedEndo &o) const { return w_ == o.w_; }
  bool operator!=(const InducedEndo &o) const { return !(*this == o); }

private:
  long k_;
  CosetVector<Ring> w_;
};

// (phi o psi)(v) = phi(psi(v))
template <class Ring>
InducedEndo<Ring> endo_compose(const InducedEndo<Ring> &phi,
                               const InducedEndo<Ring> &psi)
{
  return InducedEndo<Ring>(phi.k(), phi.apply(psi.w()));
}

template <class Ring>
struct CounterexampleReport {
  long m = 0;
  // (1/(m+1)) alpha beta = Id_V, exactly
  bool left_inverse = false;
  // beta (1/(m+1)) alpha = Id_V?  (always false; m+1 > 1 support terms)
  bool right_inverse = true;
  std::size_t beta_alpha_support = 0;
  CosetVector<Ring> beta_alpha_v;
  CosetVector<Ring> alpha_beta_v;

  bool certified() const
  {
    return left_inverse && !right_inverse && beta_alpha_support > 1;
  }
};

// Checks the two composites of alpha and beta over K and reports the
// one-sided-inverse certificate.  Requires m >= 2 and m+1 invertible in K.
template <class Ring>
CounterexampleReport<Ring> verify_counterexample(long m, const Ring &ring)
{
  if (m < 2)
    throw std::invalid_argument("verify_counterexample: m must be >= 2");
  long k = m + 1;
  auto inv_k = ring.inv(ring.from_int(k)); // throws if not invertible
  auto alpha = InducedEndo<Ring>::alpha(k, ring);
  auto beta = InducedEndo<Ring>::beta(k, ring);
  auto id = InducedEndo<Ring>::identity(k, ring);

  CounterexampleReport<Ring> rep{m,
                                 false,
                                 true,
                                 0,
                                 CosetVector<Ring>(ring),
                                 CosetVector<Ring>(ring)};
  rep.alpha_beta_v = endo_compose(alpha, beta).w();
  rep.beta_alpha_v = endo_compose(beta, alpha).w();
  rep.left_inverse = endo_compose(alpha.scaled(inv_k), beta) == id;
  rep.right_inverse = endo_compose(beta, alpha.scaled(inv_k)) == id;
  rep.beta_alpha_support = rep.beta_alpha_v.support_size();
  return rep;
}

/*
 * theta : G -> G for G = Z/m wr_X B, identity on B, (1/(m+1)) alpha on M.
 */
class ThetaMap {
public:
  using Backend = BSCosetBackend;
  using Element = WreathElement<Backend>;
  using MV = ModuleVector<Backend>;

  explicit ThetaMap(long m)
  : m_(m), backend_{m + 1}, ring_(BigInt(m)),
    spec_(std::make_shared<AbelianSpec>(std::vector<BigInt>{BigInt(m)})),
    alpha_scaled_(InducedEndo<ModRing>::alpha(m + 1, ring_)
                      .scaled(ring_.inv(ring_.from_int(m + 1)))),
    beta_scaled_(InducedEndo<ModRing>::beta(m + 1, ring_)
                     .scaled(ring_.inv(ring_.from_int(m + 1))))
  {
    if (m < 2)
      throw std::invalid_argument("ThetaMap: m must be >= 2");
  }

  long m() const { return m_; }
  const Backend &backend() const { return backend_; }
  const AbelianSpecPtr &spec() const { return spec_; }

  Element identity_element() const { return wr_identity(backend_, spec_); }

  Element apply(const Element &g) const
  {
    return {from_coset_vector(alpha_scaled_.apply(to_coset_vector(g.mv))), g.b};
  }

  // g' with theta(g') = g; uses (1/(m+1)) alpha beta = Id_M.
  Element preimage(const Element &g) const
  {
    return {from_coset_vector(beta_scaled_.apply(to_coset_vector(g.mv))), g.b};
  }

  // A nonidentity element of Ker(theta): beta alpha (v) - (m+1) v, mod m.
  Element kernel_witness() const
  {
    long k = m_ + 1;
    auto alpha = InducedEndo<ModRing>::alpha(k, ring_);
    auto beta = InducedEndo<ModRing>::beta(k, ring_);
    CosetVector<ModRing> v(ring_);
    v.add_term(base_point(k), ring_.one());
    auto w = endo_compose(beta, alpha).w() - v.scaled(ring_.from_int(k));
    return {from_coset_vector(w), backend_.identity()};
  }

  CosetVector<ModRing> to_coset_vector(const MV &mv) const
  {
    CosetVector<ModRing> u(ring_);
    for (const auto &[x, a] : mv.support())
      u.add_term(x, ring_.from_int(a.coords().at(0)));
    return u;
  }

  MV from_coset_vector(const CosetVector<ModRing> &u) const
  {
    MV mv(spec_);
    for (const auto &[x, c] : u.terms())
      mv.add_term(x, AbelianElement(spec_, {c.residue()}));
    return mv;
  }

private:
  long m_;
  Backend backend_;
  ModRing ring_;
  AbelianSpecPtr spec_;
  InducedEndo<ModRing> alpha_scaled_;
  InducedEndo<ModRing> beta_scaled_;
};

inline ThetaMap build_theta(long m) { return ThetaMap(m); }

inline WreathElement<BSCosetBackend> theta_kernel_witness(long m)
{
  return ThetaMap(m).kernel_witness();
}

inline WreathElement<BSCosetBackend>
theta_preimage(const ThetaMap &theta, const WreathElement<BSCosetBackend> &g)
{
  return theta.preimage(g);
}

} // namespace wreath
