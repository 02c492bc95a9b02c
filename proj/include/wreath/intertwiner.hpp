#pragma once

/*
 * The intertwiner algebra End_{KB}(KX): matrices commuting with every
 * permutation matrix of the action.  A matrix commutes with all of them
 * iff it is constant on the B-orbitals (orbits of B on X x X), so the
 * 0/1 orbital indicator matrices are a basis over any coefficient ring
 * and the dimension is the orbital count, which Burnside turns into the
 * average of fix(b)^2.
 *
 * direct_finiteness_probe looks for witnesses against direct finiteness
 * of M_s(End_{KB}(KX)): elements a with a right inverse x (a x = 1 solved
 * inside the algebra) whose product the other way is not 1.  In finite
 * dimension over a field no such witness exists, so any violation is a
 * defect by construction; the probe reports counts.
 */

#include "wreath/finite_action.hpp"
#include "wreath/linalg.hpp"

#include <cstdint>
#include <random>

namespace wreath {

struct OrbitalBasis {
  int npoints = 0;
  int dim = 0;
  std::vector<int> orbital_of;               // npoints*npoints, pair -> orbital
  std::vector<std::pair<int, int>> reps;     // representative pair per orbital
  std::vector<char> diagonal;                // orbital consists of (x,x) pairs?
  // structure constants: O_i O_j = sum_k c[i][j][k] O_k (integer counts)
  std::vector<std::vector<std::vector<long long>>> structure;

  int orbital(int x, int y) const { return orbital_of[x * npoints + y]; }

  // entries of the k-th basis matrix
  bool entry(int k, int x, int y) const { return orbital(x, y) == k; }
};

OrbitalBasis intertwiner_basis(const FiniteAction &action);

// (1/|B|) sum_b fix(b)^2
long long burnside_pair_orbit_count(const FiniteAction &action);

struct ProbeOptions {
  std::uint64_t seed = 0;
  long long trials = 200;
  // exhaustive enumeration when |K|^(s^2 dim) is at most this
  long long enumerate_limit = 1 << 16;
  // integer coordinate range for rational sampling
  long coord_range = 4;
};

struct ProbeReport {
  std::string ring;
  int matrix_size = 1;
  bool enumerated = false;
  long long trials = 0;
  long long right_invertible = 0;
  long long violations = 0;

  bool clean() const { return violations == 0; }
};

// Probe M_s(End_{F_p B}(F_p X)) for direct finiteness.
ProbeReport direct_finiteness_probe_fp(const OrbitalBasis &basis, long p, int s,
                                       const ProbeOptions &opts = {});

// Probe M_s(End_{QB}(QX)); with integral_only, restrict to elements with
// integer coordinates whose right inverse is also integral, probing the
// subring M_s(End_{ZB}(ZX)).
ProbeReport direct_finiteness_probe_q(const OrbitalBasis &basis, int s,
                                      const ProbeOptions &opts = {},
                                      bool integral_only = false);

struct IdempotentReport {
  bool is_idempotent = false;
  long long module_rank = 0; // dim of KB e
  long long orbit_size = 0;  // [B : H_i]
};

// e = (1/|H_i|) sum_{h in H_i} h in KB; requires |H_i| invertible in K.
IdempotentReport idempotent_split_q(const FiniteAction &action, int orbit_index);
IdempotentReport idempotent_split_fp(const FiniteAction &action, int orbit_index,
                                     long p);

} // namespace wreath
