#pragma once

/*
 * Derivations and first cohomology for a finite action.
 *
 * A derivation is a map gamma : B -> AX with
 * gamma(b1 b2) = gamma(b1) + b1 o gamma(b2); principal derivations are
 * gamma_m(b) = (1 - b) o m.  H^1(B, AX) = Der / PDer.
 *
 * Over a prime field the derivations are the nullspace of the cocycle
 * linear system assembled from the full multiplication table.  For a
 * cyclic coefficient group Z/q with q a proper prime power the solution
 * set is enumerated by generator values (a derivation is determined by
 * its values on a generating set, extended along spanning words and
 * validated against the table).  Coefficients with Z summands have their
 * free part measured as a rational rank.
 */

#include "wreath/finite_action.hpp"
#include "wreath/linalg.hpp"

namespace wreath {

struct FpDerData {
  long long der_dim = 0;
  long long pder_dim = 0;
  long long h1_dim = 0;
};

FpDerData derivations_fp(const FiniteAction &action, long p);

struct QDerData {
  long long der_dim = 0;
  long long pder_dim = 0;
  long long h1_rank = 0;
};

QDerData derivations_rational(const FiniteAction &action);

// |Der(B, (Z/q)X)| by generator-value enumeration; throws bound_exceeded
// when the candidate space q^(|X| * #generators) exceeds the budget.
BigInt count_derivations_modq(const FiniteAction &action, long q,
                              long long budget = 4000000);

// Full table of one derivation given its generator values (test support):
// returns the per-element module vectors, or nullopt when the values do
// not extend to a derivation.
std::optional<std::vector<std::vector<long>>>
extend_derivation_modq(const FiniteAction &action, long q,
                       const std::vector<std::vector<long>> &gen_values);

struct H1Part {
  BigInt p;                 // prime
  BigInt q;                 // cyclic invariant p^e
  std::size_t multiplicity; // how many Z/q summands of A
  BigInt der_count;         // per single Z/q summand
  BigInt pder_count;
  BigInt h1_size;
};

struct H1Report {
  std::vector<H1Part> parts;

  bool has_free_part = false;
  std::size_t free_rank = 0; // n_0
  long long free_der_rank = 0, free_pder_rank = 0, free_h1_rank = 0;

  // products over all torsion parts with multiplicity
  BigInt der_torsion = 1;
  BigInt pder_torsion = 1;
  BigInt h1_torsion = 1;

  // |H^1(B, A_p X)| for one prime
  BigInt h1_size_at(const BigInt &p) const;
};

H1Report derivations_h1(const FiniteAction &action, const AbelianSpec &A,
                        long long budget = 4000000);

} // namespace wreath
