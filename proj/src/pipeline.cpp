#include "wreath/pipeline.hpp"

namespace wreath {

TheoremBReport theorem_b_report(const FiniteAction &action, const AbelianSpec &A,
                                const std::vector<GroupMap> &auts,
                                const ProbeOptions &popts)
{
  TheoremBReport rep;
  rep.hyps = check_decompose_hypotheses(action, A, auts);

  auto basis = intertwiner_basis(action);
  rep.end_dim = basis.dim;
  rep.n_0 = A.rank();

  for (const auto &p : A.torsion_primes()) {
    TheoremBPrimePart part;
    part.p = p;
    part.n_p = A.np(p);
    part.end_dim = basis.dim;
    part.probe = direct_finiteness_probe_fp(basis, static_cast<long>(p.get_si()),
                                            static_cast<int>(part.n_p), popts);
    rep.probes_clean = rep.probes_clean && part.probe.clean();
    rep.primes.push_back(std::move(part));
  }
  if (rep.n_0 > 0) {
    rep.probe_free = direct_finiteness_probe_q(basis, static_cast<int>(rep.n_0),
                                               popts, /*integral_only=*/true);
    rep.probes_clean = rep.probes_clean && rep.probe_free->clean();
  }

  if (A.is_trivial()) {
    // G = B: Hopfian exactly when B is, and finite groups are Hopfian
    rep.verdict = "hopfian";
  } else if (rep.hyps.all()) {
    // over a finite X the endomorphism rings are finite dimensional, hence
    // directly finite; the equivalence then gives Hopficity
    rep.verdict = "hopfian";
  } else {
    rep.verdict = "inconclusive:";
    for (const auto &f : rep.hyps.failing())
      rep.verdict += " " + f;
  }
  return rep;
}

} // namespace wreath
