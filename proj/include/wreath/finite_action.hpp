#pragma once

/*
 * A finite group B with a left action on X = {0..n-1}, not necessarily
 * faithful or transitive, plus the orbit/stabilizer machinery and the
 * hypothesis checkers used throughout the finite pipeline.
 *
 * Text format (one action per file):
 *
 *     n <points>
 *     <generator permutation in cycle notation, one per line>
 *     [table <order> <generator element indices...>
 *      <order x order multiplication table, one row per line>]
 *
 * Without a table block the group is the permutation group generated by
 * the listed generators (faithful case).  With one, the group is given
 * abstractly by the table (identity must be element 0) and the i-th
 * permutation line is the image of the i-th listed generator index, which
 * supports non-faithful actions such as a trivial one.
 */

#include "wreath/abelian.hpp"
#include "wreath/finite_group.hpp"

#include <iosfwd>
#include <optional>

namespace wreath {

class FiniteAction {
public:
  FiniteAction(FiniteGroup group, std::vector<Perm> element_perms);

  static FiniteAction from_permutations(int npoints, std::vector<Perm> generators,
                                        std::size_t max_order = 20000);
  static FiniteAction from_stream(std::istream &in, std::size_t max_order = 20000);
  static FiniteAction from_file(const std::string &path,
                                std::size_t max_order = 20000);

  // The group acting on itself by left multiplication.
  static FiniteAction regular(const FiniteGroup &g);
  // Left action on the cosets of the subgroup (sorted element list).
  static FiniteAction coset_action(const FiniteGroup &g,
                                   const std::vector<int> &subgroup);
  static FiniteAction trivial(const FiniteGroup &g, int npoints);
  // Same group acting on the disjoint union of two point sets.
  static FiniteAction disjoint_union(const FiniteAction &a, const FiniteAction &b);

  const FiniteGroup &group() const { return group_; }
  int npoints() const { return npoints_; }
  int act(int elem, int point) const { return perms_[elem](point); }
  const Perm &perm_of(int elem) const { return perms_[elem]; }
  int fix_count(int elem) const { return perms_[elem].fixed_points(); }

  const std::vector<std::vector<int>> &orbits() const { return orbits_; }
  const std::vector<int> &orbit_reps() const { return reps_; }
  int orbit_of(int point) const { return orbit_of_[point]; }
  // g with g * rep(orbit of y) = y
  int transversal(int y) const { return transversal_[y]; }

  std::vector<int> stabilizer(int point) const;
  const std::vector<int> &kernel() const { return kernel_; }
  bool is_faithful() const { return kernel_.size() == 1; }

private:
  void compute_orbits();

  FiniteGroup group_;
  int npoints_ = 0;
  std::vector<Perm> perms_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> reps_;
  std::vector<int> orbit_of_;
  std::vector<int> transversal_;
  std::vector<int> kernel_;
};

struct OrbitsReport {
  std::vector<std::vector<int>> orbits;
  std::vector<int> reps;
  std::vector<std::vector<int>> stabilizers; // one per orbit rep
  std::vector<int> kernel;
};
OrbitsReport orbits_stabs(const FiniteAction &action);

// [B(x) : B(x) cap B(y)] = [B(y) : B(y) cap B(x)] for all pairs?
struct LundstromReport {
  bool holds = false;
  std::optional<std::pair<int, int>> witness; // failing pair of points
  std::optional<std::pair<long, long>> witness_indices;
};
LundstromReport lundstrom_check(const FiniteAction &action);

// Every nontrivial d in D has a non-abelian conjugacy class?
struct ClassCheckReport {
  bool holds = true;
  std::vector<std::pair<int, bool>> per_element; // (d, class non-abelian)
};
ClassCheckReport nonabelian_class_check(const FiniteAction &action);

// (b0 - 1)^2 annihilates a generating set of AX?
bool annihilator_square_test(const FiniteAction &action, const AbelianSpec &A,
                             int b0);

// Aut(B) permutes { stab_B(x) } as a set of subgroups?
struct StabPermReport {
  bool holds = true;
  std::optional<std::pair<std::size_t, int>> failure; // (aut index, point)
};
StabPermReport stab_permutation_check(const FiniteAction &action,
                                      const std::vector<GroupMap> &auts);

// The permutation psi(sigma) of X with psi(sigma)(g*x) = sigma(g)*psi(sigma)(x),
// built per orbit by matching sigma(H_i) = g0 H_j g0^-1 with the least
// unused j, then the least g0.  Throws std::domain_error when no match
// exists (the stabilizer permutation condition fails for sigma).
Perm psi_construct(const FiniteAction &action, const GroupMap &sigma);

// psi for every automorphism at once.  The per-sigma construction always
// satisfies the compatibility law; whether the section is multiplicative
// on the nose is recorded in `multiplicative` (checked over all pairs).
struct PsiTable {
  std::vector<GroupMap> auts;
  std::vector<Perm> psi;
  bool multiplicative = false;

  std::size_t index_of(const GroupMap &sigma) const;
  std::size_t compose(std::size_t i, std::size_t j) const; // auts[i] after auts[j]
  std::size_t inverse(std::size_t i) const;
};
PsiTable build_psi_table(const FiniteAction &action, std::vector<GroupMap> auts,
                         std::size_t max_aut = 2000);

} // namespace wreath
