#include "wreath/derivations.hpp"

namespace wreath {

namespace {

// Cocycle system rows over any field: unknowns gamma(b)_x indexed b*npts+x.
template <class F>
Mat<F> cocycle_matrix(const FiniteAction &action, const F &f)
{
  const auto &g = action.group();
  int n = g.order(), npts = action.npoints();
  std::size_t nvars = static_cast<std::size_t>(n) * npts;
  Mat<F> m;
  m.reserve(static_cast<std::size_t>(n) * n * npts);
  for (int b1 = 0; b1 < n; ++b1) {
    int b1i = g.inv(b1);
    for (int b2 = 0; b2 < n; ++b2) {
      int b12 = g.mul(b1, b2);
      for (int x = 0; x < npts; ++x) {
        // gamma(b1 b2)_x - gamma(b1)_x - gamma(b2)_{b1^-1 x} = 0
        std::vector<typename F::Elem> row(nvars, f.zero());
        auto bump = [&](int b, int pt, bool plus) {
          auto &slot = row[static_cast<std::size_t>(b) * npts + pt];
          slot = plus ? f.add(slot, f.one()) : f.sub(slot, f.one());
        };
        bump(b12, x, true);
        bump(b1, x, false);
        bump(b2, action.act(b1i, x), false);
        m.push_back(std::move(row));
      }
    }
  }
  return m;
}

long long pder_dim(const FiniteAction &action)
{
  return action.npoints() - static_cast<long long>(action.orbits().size());
}

} // namespace

FpDerData derivations_fp(const FiniteAction &action, long p)
{
  FpField f(p);
  auto m = cocycle_matrix(action, f);
  std::size_t nvars =
      static_cast<std::size_t>(action.group().order()) * action.npoints();
  FpDerData d;
  d.der_dim = static_cast<long long>(nvars - rank(f, std::move(m)));
  d.pder_dim = pder_dim(action);
  d.h1_dim = d.der_dim - d.pder_dim;
  return d;
}

QDerData derivations_rational(const FiniteAction &action)
{
  RationalRing f;
  auto m = cocycle_matrix(action, f);
  std::size_t nvars =
      static_cast<std::size_t>(action.group().order()) * action.npoints();
  QDerData d;
  d.der_dim = static_cast<long long>(nvars - rank(f, std::move(m)));
  d.pder_dim = pder_dim(action);
  d.h1_rank = d.der_dim - d.pder_dim;
  return d;
}

std::optional<std::vector<std::vector<long>>>
extend_derivation_modq(const FiniteAction &action, long q,
                       const std::vector<std::vector<long>> &gen_values)
{
  const auto &g = action.group();
  const auto &gens = g.generators();
  int n = g.order(), npts = action.npoints();
  if (gen_values.size() != gens.size())
    throw std::invalid_argument("extend_derivation_modq: one value per generator");

  auto act_on = [&](int b, const std::vector<long> &v) {
    std::vector<long> r(npts, 0);
    for (int x = 0; x < npts; ++x)
      r[action.act(b, x)] = v[x];
    return r;
  };
  auto add = [&](const std::vector<long> &a, const std::vector<long> &b) {
    std::vector<long> r(npts);
    for (int x = 0; x < npts; ++x)
      r[x] = (a[x] + b[x]) % q;
    return r;
  };

  std::vector<std::vector<long>> gamma(n, std::vector<long>(npts, 0));
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int e = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      int fidx = g.mul(e, gens[j]);
      if (!seen[fidx]) {
        seen[fidx] = 1;
        // gamma(e g_j) = gamma(e) + e o gamma(g_j)
        gamma[fidx] = add(gamma[e], act_on(e, gen_values[j]));
        queue.push_back(fidx);
      }
    }
  }

  // validate against the generators; the cocycle law on all pairs follows
  for (int e = 0; e < n; ++e)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      auto expect = add(gamma[e], act_on(e, gen_values[j]));
      if (gamma[g.mul(e, gens[j])] != expect)
        return std::nullopt;
    }
  return gamma;
}

BigInt count_derivations_modq(const FiniteAction &action, long q, long long budget)
{
  const auto &gens = action.group().generators();
  int npts = action.npoints();
  std::size_t digits = gens.size() * static_cast<std::size_t>(npts);

  long long space = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (space > budget / q)
      throw bound_exceeded("count_derivations_modq: candidate space exceeds budget");
    space *= q;
  }

  std::vector<std::vector<long>> values(gens.size(), std::vector<long>(npts, 0));
  BigInt count = 0;
  std::vector<long> odo(digits, 0);
  while (true) {
    if (extend_derivation_modq(action, q, values))
      ++count;
    std::size_t pos = 0;
    while (pos < digits && ++odo[pos] == q) {
      odo[pos] = 0;
      values[pos / npts][pos % npts] = 0;
      ++pos;
    }
    if (pos == digits)
      break;
    values[pos / npts][pos % npts] = odo[pos];
  }
  return count;
}

BigInt H1Report::h1_size_at(const BigInt &p) const
{
  BigInt s = 1;
  for (const auto &part : parts)
    if (part.p == p)
      for (std::size_t i = 0; i < part.multiplicity; ++i)
        s *= part.h1_size;
  return s;
}

H1Report derivations_h1(const FiniteAction &action, const AbelianSpec &A,
                        long long budget)
{
  H1Report rep;
  auto primary = A.primary_decompose();
  for (const auto &[p, spec] : primary) {
    if (p == 0) {
      rep.has_free_part = true;
      rep.free_rank = spec.size();
      auto qd = derivations_rational(action);
      rep.free_der_rank = qd.der_dim * static_cast<long long>(spec.size());
      rep.free_pder_rank = qd.pder_dim * static_cast<long long>(spec.size());
      rep.free_h1_rank = qd.h1_rank * static_cast<long long>(spec.size());
      continue;
    }
    // group equal prime powers
    std::map<BigInt, std::size_t> mult;
    for (const auto &qv : spec.invariants())
      ++mult[qv];
    for (const auto &[qv, count] : mult) {
      H1Part part;
      part.p = p;
      part.q = qv;
      part.multiplicity = count;
      if (qv == p) {
        auto d = derivations_fp(action, static_cast<long>(p.get_si()));
        part.der_count = pow_int(p, static_cast<unsigned long>(d.der_dim));
        part.pder_count = pow_int(p, static_cast<unsigned long>(d.pder_dim));
        part.h1_size = pow_int(p, static_cast<unsigned long>(d.h1_dim));
      } else {
        if (!qv.fits_slong_p())
          throw bound_exceeded("derivations_h1: invariant too large");
        long qq = qv.get_si();
        part.der_count = count_derivations_modq(action, qq, budget);
        part.pder_count = 1;
        BigInt qb(qq);
        for (long long i = 0; i < pder_dim(action); ++i)
          part.pder_count *= qb;
        part.h1_size = part.der_count / part.pder_count;
        if (part.h1_size * part.pder_count != part.der_count)
          throw std::logic_error("derivations_h1: PDer does not divide Der");
      }
      for (std::size_t i = 0; i < count; ++i) {
        rep.der_torsion *= part.der_count;
        rep.pder_torsion *= part.pder_count;
        rep.h1_torsion *= part.h1_size;
      }
      rep.parts.push_back(std::move(part));
    }
  }
  return rep;
}

} // namespace wreath
