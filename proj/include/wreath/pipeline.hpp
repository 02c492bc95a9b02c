#pragma once

/*
 * Hypothesis checking and the Hopficity verdict the finite-scale theory
 * licenses: with the four hypotheses in place, G = A wr_X B is Hopfian
 * iff certain matrix rings over intertwiner algebras are directly finite,
 * and over a finite point set those rings are finite dimensional, so the
 * verdict is Hopfian whenever the hypotheses hold.  The probes run anyway
 * and any violation they report is a defect, never a result.
 */

#include "wreath/finite_wreath.hpp"
#include "wreath/intertwiner.hpp"

namespace wreath {

struct TheoremBPrimePart {
  BigInt p;
  std::size_t n_p = 0;
  int end_dim = 0; // dim End_{F_p B}(F_p X) = orbital count
  ProbeReport probe; // on M_{n_p}(End)
};

struct TheoremBReport {
  DecomposeHypotheses hyps;
  std::vector<TheoremBPrimePart> primes;
  std::size_t n_0 = 0;
  int end_dim = 0;                      // orbital count (any coefficients)
  std::optional<ProbeReport> probe_free; // integral probe when n_0 > 0
  bool probes_clean = true;
  std::string verdict; // "hopfian" or "inconclusive: <condition> fails"
};

TheoremBReport theorem_b_report(const FiniteAction &action, const AbelianSpec &A,
                                const std::vector<GroupMap> &auts,
                                const ProbeOptions &popts = {});

} // namespace wreath
