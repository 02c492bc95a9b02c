#pragma once

/*
 * Exact coefficient arithmetic.
 *
 * LocalizedInt models the subring Z[1/k] of Q: values num / k^e with a
 * fixed base k >= 2.  Canonical form has e = 0 or k not dividing num, so
 * structural equality is value equality.  k may be composite; canonical
 * reduction divides out full powers of k greedily.
 *
 * ModScalar models Z/N for a runtime modulus N >= 2, with decidable
 * invertibility via gcd.
 *
 * Everything is arbitrary precision (GMP); there is no floating point in
 * this library.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wreath {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow_int(const BigInt &base, unsigned long e)
{
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

class LocalizedInt {
public:
  LocalizedInt() : base_(2), num_(0), exp_(0) {}

  explicit LocalizedInt(long base, BigInt num = 0, long exp = 0)
  : base_(base), num_(std::move(num)), exp_(exp)
  {
    if (base_ < 2)
      throw std::invalid_argument("LocalizedInt: base must be >= 2");
    if (exp_ < 0)
      throw std::invalid_argument("LocalizedInt: exponent must be >= 0");
    canonicalize();
  }

  long base() const { return base_; }
  const BigInt &numerator() const { return num_; }
  long exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  LocalizedInt operator+(const LocalizedInt &o) const
  {
    check_base(o);
    long e = std::max(exp_, o.exp_);
    BigInt n = num_ * pow_int(base_, static_cast<unsigned long>(e - exp_)) +
               o.num_ * pow_int(base_, static_cast<unsigned long>(e - o.exp_));
    return LocalizedInt(base_, std::move(n), e);
  }

  LocalizedInt operator-() const { return LocalizedInt(base_, -num_, exp_); }

  LocalizedInt operator-(const LocalizedInt &o) const { return *this + (-o); }

  LocalizedInt operator*(const LocalizedInt &o) const
  {
    check_base(o);
    return LocalizedInt(base_, num_ * o.num_, exp_ + o.exp_);
  }

  LocalizedInt scaled(const BigInt &c) const
  {
    return LocalizedInt(base_, num_ * c, exp_);
  }

  // Multiply by base^e, e of either sign.
  LocalizedInt shifted(long e) const
  {
    if (e <= 0)
      return LocalizedInt(base_, num_, exp_ - e);
    long drop = std::min(exp_, e);
    BigInt n = num_ * pow_int(base_, static_cast<unsigned long>(e - drop));
    return LocalizedInt(base_, std::move(n), exp_ - drop);
  }

  // Integer part under floor division; frac() is the remainder in [0,1).
  BigInt floor() const
  {
    BigInt q, den = pow_int(base_, static_cast<unsigned long>(exp_));
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den.get_mpz_t());
    return q;
  }

  LocalizedInt frac() const
  {
    BigInt r, den = pow_int(base_, static_cast<unsigned long>(exp_));
    mpz_fdiv_r(r.get_mpz_t(), num_.get_mpz_t(), den.get_mpz_t());
    return LocalizedInt(base_, std::move(r), exp_);
  }

  bool operator==(const LocalizedInt &o) const
  {
    return base_ == o.base_ && exp_ == o.exp_ && num_ == o.num_;
  }
  bool operator!=(const LocalizedInt &o) const { return !(*this == o); }

  bool operator<(const LocalizedInt &o) const
  {
    check_base(o);
    return num_ * pow_int(base_, static_cast<unsigned long>(o.exp_)) <
           o.num_ * pow_int(base_, static_cast<unsigned long>(exp_));
  }

  Rational to_rational() const
  {
    Rational r(num_, pow_int(base_, static_cast<unsigned long>(exp_)));
    r.canonicalize();
    return r;
  }

  std::string str() const
  {
    if (exp_ == 0)
      return num_.get_str();
    return num_.get_str() + "/" +
           pow_int(base_, static_cast<unsigned long>(exp_)).get_str();
  }

private:
  void canonicalize()
  {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    BigInt b(base_);
    while (exp_ > 0 && mpz_divisible_p(num_.get_mpz_t(), b.get_mpz_t())) {
      num_ /= b;
      --exp_;
    }
  }

  void check_base(const LocalizedInt &o) const
  {
    if (base_ != o.base_)
      throw std::invalid_argument("LocalizedInt: mixed bases " +
                                  std::to_string(base_) + " and " +
                                  std::to_string(o.base_));
  }

  long base_;
  BigInt num_;
  long exp_;
};

// Residue classes mod N, N >= 2.
class ModScalar {
public:
  ModScalar() : modulus_(2), residue_(0) {}

  ModScalar(BigInt residue, BigInt modulus)
  : modulus_(std::move(modulus))
  {
    if (modulus_ < 2)
      throw std::invalid_argument("ModScalar: modulus must be >= 2");
    mpz_fdiv_r(residue_.get_mpz_t(), residue.get_mpz_t(), modulus_.get_mpz_t());
  }

  const BigInt &residue() const { return residue_; }
  const BigInt &modulus() const { return modulus_; }

  bool is_zero() const { return residue_ == 0; }

  ModScalar operator+(const ModScalar &o) const
  {
    check_mod(o);
    return ModScalar(residue_ + o.residue_, modulus_);
  }
  ModScalar operator-() const { return ModScalar(-residue_, modulus_); }
  ModScalar operator-(const ModScalar &o) const { return *this + (-o); }
  ModScalar operator*(const ModScalar &o) const
  {
    check_mod(o);
    return ModScalar(residue_ * o.residue_, modulus_);
  }

  bool is_invertible() const
  {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
    return g == 1;
  }

  ModScalar inverse() const
  {
    BigInt inv;
    if (!mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t()))
      throw std::domain_error("ModScalar: " + residue_.get_str() +
                              " is not invertible mod " + modulus_.get_str());
    return ModScalar(std::move(inv), modulus_);
  }

  bool operator==(const ModScalar &o) const
  {
    return modulus_ == o.modulus_ && residue_ == o.residue_;
  }
  bool operator!=(const ModScalar &o) const { return !(*this == o); }

private:
  void check_mod(const ModScalar &o) const
  {
    if (modulus_ != o.modulus_)
      throw std::invalid_argument("ModScalar: mixed moduli " +
                                  modulus_.get_str() + " and " +
                                  o.modulus_.get_str());
  }

  BigInt modulus_;
  BigInt residue_;
};

inline ModScalar mod_inverse(const ModScalar &s) { return s.inverse(); }

/*
 * Coefficient-ring contexts.  Vector and matrix code is generic over a
 * ring context providing element construction and arithmetic; the two
 * instances are Q and Z/N.  Division requires a field (Q, or Z/p with p
 * prime); ModRing::inv throws on a non-invertible element, which makes it
 * usable as a field context exactly when the modulus is prime.
 */
struct RationalRing {
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(const BigInt &n) const { return Rational(n); }
  bool is_zero(const Elem &a) const { return a == 0; }
  Elem add(const Elem &a, const Elem &b) const { return a + b; }
  Elem sub(const Elem &a, const Elem &b) const { return a - b; }
  Elem neg(const Elem &a) const { return -a; }
  Elem mul(const Elem &a, const Elem &b) const { return a * b; }
  Elem inv(const Elem &a) const
  {
    if (a == 0)
      throw std::domain_error("RationalRing: division by zero");
    return 1 / a;
  }
  std::string str(const Elem &a) const { return a.get_str(); }
};

struct ModRing {
  BigInt modulus;

  explicit ModRing(BigInt n) : modulus(std::move(n))
  {
    if (modulus < 2)
      throw std::invalid_argument("ModRing: modulus must be >= 2");
  }

  using Elem = ModScalar;

  Elem zero() const { return ModScalar(0, modulus); }
  Elem one() const { return ModScalar(1, modulus); }
  Elem from_int(const BigInt &n) const { return ModScalar(n, modulus); }
  bool is_zero(const Elem &a) const { return a.is_zero(); }
  Elem add(const Elem &a, const Elem &b) const { return a + b; }
  Elem sub(const Elem &a, const Elem &b) const { return a - b; }
  Elem neg(const Elem &a) const { return -a; }
  Elem mul(const Elem &a, const Elem &b) const { return a * b; }
  Elem inv(const Elem &a) const { return a.inverse(); }
  std::string str(const Elem &a) const { return a.residue().get_str(); }
};

} // namespace wreath
