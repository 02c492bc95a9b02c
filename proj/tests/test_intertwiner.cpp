#include "doctest.h"

#include "wreath/intertwiner.hpp"

using namespace wreath;

namespace {

FiniteAction s3_natural()
{
  return FiniteAction::from_permutations(
      3, {Perm::parse_cycles("(1 2)", 3), Perm::parse_cycles("(1 2 3)", 3)});
}

FiniteAction c2_mixed()
{
  auto c2 = FiniteGroup::cyclic(2);
  return FiniteAction::disjoint_union(FiniteAction::trivial(c2, 1),
                                      FiniteAction::regular(c2));
}

// oracle: dimension of the solution space of C P(b) = P(b) C over F_p,
// solved for the generators (the centralizer condition)
long long commutant_dim_fp(const FiniteAction &a, long p)
{
  FpField f(p);
  int n = a.npoints();
  std::size_t nvars = static_cast<std::size_t>(n) * n;
  Mat<FpField> m;
  for (int ge : a.group().generators())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // (C P - P C)[i][j] = C[i][g^-1 j] - C[g i ... ]
        std::vector<long> row(nvars, 0);
        int gj = a.act(ge, j);
        // (C P(g))[i][j] = C[i][g(j)]?  P(g)[x][y] = 1 iff x = g(y), so
        // (C P)[i][j] = C[i][g(j)] and (P C)[i][j] = C[g^-1(i)][j].
        row[static_cast<std::size_t>(i) * n + gj] =
            f.add(row[static_cast<std::size_t>(i) * n + gj], 1);
        std::size_t k =
            static_cast<std::size_t>(a.act(a.group().inv(ge), i)) * n + j;
        row[k] = f.sub(row[k], 1);
        m.push_back(std::move(row));
      }
  return static_cast<long long>(nvars - rank(f, std::move(m)));
}

std::vector<std::vector<long>> basis_matrix(const OrbitalBasis &b, int k)
{
  std::vector<std::vector<long>> m(b.npoints, std::vector<long>(b.npoints, 0));
  for (int x = 0; x < b.npoints; ++x)
    for (int y = 0; y < b.npoints; ++y)
      if (b.orbital(x, y) == k)
        m[x][y] = 1;
  return m;
}

} // namespace

TEST_CASE("orbital dimension equals the Burnside count")
{
  struct Case {
    FiniteAction action;
    int expect;
  };
  std::vector<Case> cases;
  cases.push_back({s3_natural(), 2});
  cases.push_back({FiniteAction::regular(FiniteGroup::cyclic(2)), 2});
  cases.push_back({FiniteAction::regular(FiniteGroup::cyclic(3)), 3});
  cases.push_back({FiniteAction::regular(FiniteGroup::cyclic(4)), 4});
  cases.push_back({c2_mixed(), 5});
  cases.push_back({FiniteAction::trivial(FiniteGroup::cyclic(2), 2), 4});

  for (const auto &c : cases) {
    auto b = intertwiner_basis(c.action);
    CHECK(b.dim == c.expect);
    CHECK(b.dim == burnside_pair_orbit_count(c.action));
    // and the commutation linear system has the same solution dimension
    CHECK(b.dim == commutant_dim_fp(c.action, 2));
    CHECK(b.dim == commutant_dim_fp(c.action, 5));
  }
}

TEST_CASE("basis matrices commute with the action")
{
  for (const auto &action :
       {s3_natural(), c2_mixed(), FiniteAction::regular(FiniteGroup::cyclic(4))}) {
    auto b = intertwiner_basis(action);
    for (int k = 0; k < b.dim; ++k) {
      auto M = basis_matrix(b, k);
      for (int e = 0; e < action.group().order(); ++e)
        for (int x = 0; x < b.npoints; ++x)
          for (int y = 0; y < b.npoints; ++y)
            // M[e x][e y] = M[x][y] is exactly the commutation condition
            CHECK(M[action.act(e, x)][action.act(e, y)] == M[x][y]);
    }
  }
}

TEST_CASE("structure constants match matrix products")
{
  for (const auto &action : {s3_natural(), c2_mixed()}) {
    auto b = intertwiner_basis(action);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) {
        auto Mi = basis_matrix(b, i), Mj = basis_matrix(b, j);
        // direct product
        std::vector<std::vector<long>> prod(b.npoints,
                                            std::vector<long>(b.npoints, 0));
        for (int x = 0; x < b.npoints; ++x)
          for (int z = 0; z < b.npoints; ++z)
            for (int y = 0; y < b.npoints; ++y)
              prod[x][y] += Mi[x][z] * Mj[z][y];
        // expansion through the structure constants
        for (int x = 0; x < b.npoints; ++x)
          for (int y = 0; y < b.npoints; ++y)
            CHECK(prod[x][y] == b.structure[i][j][b.orbital(x, y)]);
      }
  }
}

TEST_CASE("direct finiteness probes find no violations")
{
  ProbeOptions opts;
  opts.trials = 60;

  // exhaustive: every right-invertible element over F_2, dim <= 4, s = 1
  for (const auto &action : {s3_natural(), FiniteAction::regular(FiniteGroup::cyclic(2))}) {
    auto b = intertwiner_basis(action);
    auto rep = direct_finiteness_probe_fp(b, 2, 1, opts);
    CHECK(rep.enumerated);
    CHECK(rep.trials == (1 << b.dim));
    CHECK(rep.right_invertible >= 1); // the identity, at least
    CHECK(rep.violations == 0);
  }
  // ... that run finds exactly the units: F_2 C_2 has 2, while for the
  // natural S_3 algebra over F_2 only the identity is invertible
  CHECK(direct_finiteness_probe_fp(
            intertwiner_basis(FiniteAction::regular(FiniteGroup::cyclic(2))), 2, 1,
            opts)
            .right_invertible == 2);

  // matrix size 2 over F_3: 3^8 coordinate tuples, still enumerable
  {
    auto b = intertwiner_basis(s3_natural());
    auto rep = direct_finiteness_probe_fp(b, 3, 2, opts);
    CHECK(rep.enumerated);
    CHECK(rep.trials == 6561);
    CHECK(rep.right_invertible > 0);
    CHECK(rep.violations == 0);
  }

  // sampled: matrix size 2 over F_5 is past the enumeration limit
  {
    auto b = intertwiner_basis(s3_natural());
    auto rep = direct_finiteness_probe_fp(b, 5, 2, opts);
    CHECK_FALSE(rep.enumerated);
    CHECK(rep.trials == opts.trials);
    CHECK(rep.violations == 0);
  }

  // rational and integral sampling
  {
    auto b = intertwiner_basis(c2_mixed());
    auto repq = direct_finiteness_probe_q(b, 1, opts);
    CHECK(repq.right_invertible > 0);
    CHECK(repq.violations == 0);
    auto repz = direct_finiteness_probe_q(b, 1, opts, /*integral_only=*/true);
    CHECK(repz.violations == 0);
  }
}

TEST_CASE("enumerated unit counts match the ring structure")
{
  ProbeOptions opts;

  // F_2 C_2 is local with radical (1+c): M_2 of it has 6 * 16 units
  auto reg2 = intertwiner_basis(FiniteAction::regular(FiniteGroup::cyclic(2)));
  auto rep = direct_finiteness_probe_fp(reg2, 2, 2, opts);
  CHECK(rep.enumerated);
  CHECK(rep.trials == 256);
  CHECK(rep.right_invertible == 96); // |GL_2(F_2)| * |M_2(J)|
  CHECK(rep.violations == 0);

  // F_3 C_3 = F_3[t]/(t^3): units are the 18 elements with unit constant term
  auto reg3 = intertwiner_basis(FiniteAction::regular(FiniteGroup::cyclic(3)));
  auto rep3 = direct_finiteness_probe_fp(reg3, 3, 1, opts);
  CHECK(rep3.enumerated);
  CHECK(rep3.trials == 27);
  CHECK(rep3.right_invertible == 18);
  CHECK(rep3.violations == 0);
}

TEST_CASE("induced idempotent and its summand rank")
{
  auto nat = s3_natural(); // H = stab(point) has order 2, [S3:H] = 3
  auto rep = idempotent_split_q(nat, 0);
  CHECK(rep.is_idempotent);
  CHECK(rep.orbit_size == 3);
  CHECK(rep.module_rank == 3);

  // trivial H: e = 1, rank |B|
  auto reg = FiniteAction::regular(FiniteGroup::symmetric(3));
  auto rep2 = idempotent_split_q(reg, 0);
  CHECK(rep2.is_idempotent);
  CHECK(rep2.module_rank == 6);

  // char K coprime to |H|
  auto rep5 = idempotent_split_fp(nat, 0, 5);
  CHECK(rep5.is_idempotent);
  CHECK(rep5.module_rank == 3);

  CHECK_THROWS_AS(idempotent_split_fp(nat, 0, 2), std::domain_error);
}
