#pragma once

/*
 * Finitely generated abelian coefficient groups.
 *
 * A group A is specified by a list of cyclic invariants: 0 encodes a Z
 * summand, d >= 2 encodes Z/d.  The list is arbitrary user order, not
 * necessarily a divisibility chain; the primary decomposition
 * A = (+)_{p>=0} A_p is computed on demand.  By convention p = 0 labels
 * the torsion-free part.
 */

#include "wreath/scalars.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace wreath {

class AbelianSpec;
using AbelianSpecPtr = std::shared_ptr<const AbelianSpec>;

class AbelianSpec {
public:
  AbelianSpec() = default;

  explicit AbelianSpec(std::vector<BigInt> invariants)
  : invariants_(std::move(invariants))
  {
    for (const auto &d : invariants_)
      if (d < 0 || d == 1)
        throw std::invalid_argument(
            "AbelianSpec: invariants must be 0 or >= 2, got " + d.get_str());
  }

  // Comma-separated list, e.g. "0,4,3" for Z + Z/4 + Z/3.
  static AbelianSpec parse(const std::string &text);

  const std::vector<BigInt> &invariants() const { return invariants_; }
  std::size_t size() const { return invariants_.size(); }
  bool is_trivial() const { return invariants_.empty(); }

  // rk A_0
  std::size_t rank() const
  {
    std::size_t r = 0;
    for (const auto &d : invariants_)
      if (d == 0)
        ++r;
    return r;
  }

  // n_p = dim over F_p of A_p / p A_p = number of invariants divisible by p
  std::size_t np(const BigInt &p) const
  {
    std::size_t r = 0;
    for (const auto &d : invariants_)
      if (d != 0 && mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
        ++r;
    return r;
  }

  bool is_finite() const { return rank() == 0; }

  std::optional<BigInt> order() const
  {
    if (!is_finite())
      return std::nullopt;
    BigInt o = 1;
    for (const auto &d : invariants_)
      o *= d;
    return o;
  }

  // Least n >= 1 with nA = 0, or nullopt when A has a Z summand.
  std::optional<BigInt> exponent() const
  {
    if (!is_finite())
      return std::nullopt;
    BigInt e = 1;
    for (const auto &d : invariants_)
      mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), d.get_mpz_t());
    return e;
  }

  // A = (+)_{p >= 0} A_p; key 0 is the torsion-free part, prime keys the
  // p-primary parts (invariants are the prime-power orders).
  std::map<BigInt, AbelianSpec> primary_decompose() const;

  // Primes p with A_p != 0.
  std::vector<BigInt> torsion_primes() const;

  // Merge primary parts back into one spec via CRT (invariant factors in a
  // divisibility chain, Z summands appended as zeros).
  static AbelianSpec crt_recombine(const std::map<BigInt, AbelianSpec> &parts);

  // Isomorphism type = rank plus the multiset of prime-power invariants.
  static bool isomorphic(const AbelianSpec &a, const AbelianSpec &b);

  bool operator==(const AbelianSpec &o) const
  {
    return invariants_ == o.invariants_;
  }
  bool operator!=(const AbelianSpec &o) const { return !(*this == o); }

  std::string str() const;

private:
  std::vector<BigInt> invariants_;
};

// An element of A: one coordinate per invariant, modular coordinates kept
// reduced to [0, d).  Elements carry their spec so mismatched operands are
// rejected.
class AbelianElement {
public:
  AbelianElement() = default;

  AbelianElement(AbelianSpecPtr spec, std::vector<BigInt> coords)
  : spec_(std::move(spec)), coords_(std::move(coords))
  {
    if (coords_.size() != spec_->size())
      throw std::invalid_argument("AbelianElement: coordinate count mismatch");
    reduce();
  }

  static AbelianElement zero(AbelianSpecPtr spec)
  {
    std::vector<BigInt> c(spec->size(), 0);
    return AbelianElement(std::move(spec), std::move(c));
  }

  const AbelianSpec &spec() const { return *spec_; }
  const AbelianSpecPtr &spec_ptr() const { return spec_; }
  const std::vector<BigInt> &coords() const { return coords_; }

  bool is_zero() const
  {
    for (const auto &c : coords_)
      if (c != 0)
        return false;
    return true;
  }

  AbelianElement operator+(const AbelianElement &o) const
  {
    check_spec(o);
    std::vector<BigInt> c(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
      c[i] = coords_[i] + o.coords_[i];
    return AbelianElement(spec_, std::move(c));
  }

  AbelianElement operator-() const
  {
    std::vector<BigInt> c(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
      c[i] = -coords_[i];
    return AbelianElement(spec_, std::move(c));
  }

  AbelianElement operator-(const AbelianElement &o) const { return *this + (-o); }

  AbelianElement scaled(const BigInt &n) const
  {
    std::vector<BigInt> c(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
      c[i] = coords_[i] * n;
    return AbelianElement(spec_, std::move(c));
  }

  bool operator==(const AbelianElement &o) const
  {
    return *spec_ == *o.spec_ && coords_ == o.coords_;
  }
  bool operator!=(const AbelianElement &o) const { return !(*this == o); }

  std::string str() const;

private:
  void reduce()
  {
    const auto &inv = spec_->invariants();
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (inv[i] != 0)
        mpz_fdiv_r(coords_[i].get_mpz_t(), coords_[i].get_mpz_t(),
                   inv[i].get_mpz_t());
  }

  void check_spec(const AbelianElement &o) const
  {
    if (spec_ != o.spec_ && *spec_ != *o.spec_)
      throw std::invalid_argument("AbelianElement: spec mismatch");
  }

  AbelianSpecPtr spec_;
  std::vector<BigInt> coords_;
};

inline AbelianElement a_add(const AbelianElement &x, const AbelianElement &y)
{
  return x + y;
}

inline AbelianElement unit_element(const AbelianSpecPtr &spec, std::size_t i)
{
  std::vector<BigInt> c(spec->size(), 0);
  c.at(i) = 1;
  return AbelianElement(spec, std::move(c));
}

// Trial-division factorization, smallest factors first.
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n);

} // namespace wreath
