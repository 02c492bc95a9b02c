#include "doctest.h"

#include "wreath/finite_action.hpp"

#include <sstream>

using namespace wreath;

namespace {

FiniteAction s3_natural()
{
  return FiniteAction::from_permutations(
      3, {Perm::parse_cycles("(1 2)", 3), Perm::parse_cycles("(1 2 3)", 3)});
}

// one fixed point plus a regular orbit
FiniteAction c2_mixed()
{
  auto c2 = FiniteGroup::cyclic(2);
  return FiniteAction::disjoint_union(FiniteAction::trivial(c2, 1),
                                      FiniteAction::regular(c2));
}

FiniteAction c4_mixed()
{
  auto c4 = FiniteGroup::cyclic(4);
  int csq = c4.mul(c4.generators()[0], c4.generators()[0]);
  auto half = FiniteAction::coset_action(c4, c4.closure({csq}));
  return FiniteAction::disjoint_union(half, FiniteAction::trivial(c4, 1));
}

} // namespace

TEST_CASE("orbits, stabilizers and kernel")
{
  auto nat = s3_natural();
  auto rep = orbits_stabs(nat);
  REQUIRE(rep.orbits.size() == 1);
  CHECK(rep.orbits[0] == std::vector<int>{0, 1, 2});
  CHECK(rep.reps == std::vector<int>{0});
  CHECK(rep.stabilizers[0].size() == 2);
  CHECK(rep.kernel == std::vector<int>{0});

  auto triv = FiniteAction::trivial(FiniteGroup::cyclic(2), 2);
  auto trep = orbits_stabs(triv);
  CHECK(trep.orbits.size() == 2);
  CHECK(trep.kernel.size() == 2); // D = C2

  auto reg = FiniteAction::regular(FiniteGroup::cyclic(2));
  auto rrep = orbits_stabs(reg);
  CHECK(rrep.orbits.size() == 1);
  CHECK(rrep.stabilizers[0] == std::vector<int>{0});
  CHECK(rrep.kernel == std::vector<int>{0});
}

TEST_CASE("transversal elements move the representative")
{
  auto act = c4_mixed();
  for (int y = 0; y < act.npoints(); ++y) {
    int rep = act.orbit_reps()[act.orbit_of(y)];
    CHECK(act.act(act.transversal(y), rep) == y);
  }
}

TEST_CASE("coset actions")
{
  auto c4 = FiniteGroup::cyclic(4);
  int c = c4.generators()[0];
  auto half = FiniteAction::coset_action(c4, c4.closure({c4.mul(c, c)}));
  CHECK(half.npoints() == 2);
  CHECK(half.stabilizer(0).size() == 2);
  CHECK(half.kernel().size() == 2); // <c^2> acts trivially on both cosets

  auto reg = FiniteAction::coset_action(c4, {0});
  CHECK(reg.npoints() == 4);
  CHECK(reg.is_faithful());
}

TEST_CASE("action file parsing")
{
  std::istringstream nat("n 3\n(1 2)\n(1 2 3)\n");
  auto a = FiniteAction::from_stream(nat);
  CHECK(a.group().order() == 6);
  CHECK(a.npoints() == 3);

  // trivial C2 action on one point via a table block
  std::istringstream triv("n 1\n(1)\ntable 2 1\n0 1\n1 0\n");
  auto t = FiniteAction::from_stream(triv);
  CHECK(t.group().order() == 2);
  CHECK(t.npoints() == 1);
  CHECK(t.kernel().size() == 2);

  std::istringstream comments("# comment\nn 2\n(1 2)  # swap\n");
  CHECK(FiniteAction::from_stream(comments).group().order() == 2);

  std::istringstream empty("");
  CHECK_THROWS_AS(FiniteAction::from_stream(empty), std::invalid_argument);
  std::istringstream nogens("n 3\n");
  CHECK_THROWS_AS(FiniteAction::from_stream(nogens), std::invalid_argument);
  std::istringstream badhead("m 3\n(1 2)\n");
  CHECK_THROWS_AS(FiniteAction::from_stream(badhead), std::invalid_argument);
  std::istringstream shortrow("n 1\n(1)\ntable 2 1\n0 1\n1\n");
  CHECK_THROWS_AS(FiniteAction::from_stream(shortrow), std::invalid_argument);
}

TEST_CASE("lundstrom index condition")
{
  CHECK(lundstrom_check(s3_natural()).holds);
  CHECK(lundstrom_check(FiniteAction::regular(FiniteGroup::cyclic(2))).holds);
  CHECK(lundstrom_check(FiniteAction::regular(FiniteGroup::cyclic(3))).holds);
  CHECK(lundstrom_check(FiniteAction::regular(FiniteGroup::symmetric(3))).holds);
  CHECK(lundstrom_check(FiniteAction::trivial(FiniteGroup::cyclic(2), 1)).holds);

  auto mixed = c2_mixed();
  auto rep = lundstrom_check(mixed);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witness.has_value());
  // the fixed point against a free point: indices 2 vs 1
  auto [x, y] = *rep.witness;
  auto [ix, iy] = *rep.witness_indices;
  CHECK(ix != iy);
  CHECK(std::max(ix, iy) == 2);
  CHECK(std::min(ix, iy) == 1);
  CHECK(mixed.stabilizer(x).size() != mixed.stabilizer(y).size());
}

TEST_CASE("kernel conjugacy class condition")
{
  // trivial kernel: vacuous
  CHECK(nonabelian_class_check(s3_natural()).holds);
  CHECK(nonabelian_class_check(s3_natural()).per_element.empty());

  // C2 acting trivially: the involution has abelian class {d}
  auto c2t = FiniteAction::trivial(FiniteGroup::cyclic(2), 1);
  auto rep = nonabelian_class_check(c2t);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.per_element.size() == 1);
  CHECK_FALSE(rep.per_element[0].second);

  // S3 acting trivially: the class of a 3-cycle is {c, c^2}, abelian
  auto s3t = FiniteAction::trivial(FiniteGroup::symmetric(3), 1);
  CHECK_FALSE(nonabelian_class_check(s3t).holds);
}

TEST_CASE("annihilator square test")
{
  auto nat = s3_natural();
  AbelianSpec z3({3});

  // identity and kernel elements pass trivially
  CHECK(annihilator_square_test(nat, z3, 0));

  // a transposition fails over Z/3: (b0-1)^2 x = 2x - 2 b0 x != 0
  int transposition = -1;
  for (int e = 1; e < nat.group().order(); ++e)
    if (nat.group().element_order(e) == 2) {
      transposition = e;
      break;
    }
  REQUIRE(transposition > 0);
  CHECK_FALSE(annihilator_square_test(nat, z3, transposition));

  // but it passes over Z/2, where 2 = 0
  CHECK(annihilator_square_test(nat, AbelianSpec({2}), transposition));

  // kernel elements pass: C2 acting trivially, b0 the involution
  auto c2t = FiniteAction::trivial(FiniteGroup::cyclic(2), 2);
  CHECK(annihilator_square_test(c2t, z3, 1));
}

TEST_CASE("stabilizer permutation condition")
{
  auto nat = s3_natural();
  CHECK(stab_permutation_check(nat, aut_brute(nat.group())).holds);

  auto reg = FiniteAction::regular(FiniteGroup::symmetric(3));
  CHECK(stab_permutation_check(reg, aut_brute(reg.group())).holds);

  auto mixed = c4_mixed();
  CHECK(stab_permutation_check(mixed, aut_brute(mixed.group())).holds);
}

TEST_CASE("psi construction")
{
  auto nat = s3_natural();
  const auto &g = nat.group();
  auto auts = aut_brute(g);

  // identity automorphism gives the identity permutation
  GroupMap id(g.order());
  for (int i = 0; i < g.order(); ++i)
    id[i] = i;
  CHECK(psi_construct(nat, id).is_identity());

  // inner automorphisms give the conjugator's own permutation on points
  for (int c = 0; c < g.order(); ++c) {
    CHECK(psi_construct(nat, inner_automorphism(g, c)) == nat.perm_of(c));
  }
}

TEST_CASE("psi tables are multiplicative on the bundled actions")
{
  auto check_action = [](const FiniteAction &a) {
    auto t = build_psi_table(a, aut_brute(a.group()));
    CHECK(t.multiplicative);
    // compatibility: psi(sigma)(g*x) = sigma(g)*psi(sigma)(x) spot-verified
    for (std::size_t s = 0; s < t.auts.size(); ++s)
      for (int e = 0; e < a.group().order(); ++e)
        for (int x = 0; x < a.npoints(); ++x)
          CHECK(t.psi[s](a.act(e, x)) == a.act(t.auts[s][e], t.psi[s](x)));
  };
  check_action(s3_natural());
  check_action(FiniteAction::regular(FiniteGroup::cyclic(3)));
  check_action(c4_mixed());
  check_action(FiniteAction::regular(FiniteGroup::symmetric(3)));
}
