#pragma once

/*
 * Finite groups for the brute-force pipeline.
 *
 * A group is a list of elements 0..n-1 (0 the identity) with a cached
 * multiplication table.  Groups come either from a faithful permutation
 * generating set (closure) or from an explicit table plus designated
 * generator indices (needed when an action is not faithful).
 *
 * aut_brute enumerates Aut(G) by generator-image search: candidate images
 * are filtered by (element order, conjugacy class size), each candidate
 * tuple is extended along a fixed spanning word per element, and the
 * resulting map is kept when it is bijective and multiplicative against
 * the generators.  Intended for |G| within max_order (default 200); a
 * candidate-tuple cap guards against groups whose automorphism search
 * explodes anyway (large elementary abelian ones).
 */

#include "wreath/perm.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

struct bound_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Image table of a group homomorphism G -> G.
using GroupMap = std::vector<int>;

class FiniteGroup {
public:
  // An empty group; only meaningful once assigned from a factory.
  FiniteGroup() = default;

  static FiniteGroup from_permutations(int npoints, std::vector<Perm> generators,
                                       std::size_t max_order = 20000);

  // Table must have identity 0; generator indices must generate the group.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<int> generator_indices);

  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n, std::size_t max_order = 20000);
  static FiniteGroup dihedral(int n); // order 2n, acting on an n-gon

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  const std::vector<int> &generators() const { return gens_; }

  // Faithful permutation realization when built from permutations;
  // empty otherwise.
  const std::vector<Perm> &permutations() const { return perms_; }
  bool has_permutations() const { return !perms_.empty(); }

  int element_order(int a) const;
  bool is_abelian() const;
  std::vector<int> center() const;

  std::vector<std::vector<int>> conjugacy_classes() const; // each sorted
  std::vector<int> class_of(int a) const;

  // Subgroup generated by the seed, as a sorted element list.
  std::vector<int> closure(const std::vector<int> &seed) const;

  std::vector<std::vector<int>> all_subgroups(std::size_t max_count = 100000) const;

  // Greedy generating set, improved to a minimal one for small orders.
  std::vector<int> small_generating_set() const;

  // BFS spanning structure over the given generators: parent[e], via[e]
  // with e = mul(parent[e], gens[via[e]]) and element 0 the root.
  void spanning_words(const std::vector<int> &gens, std::vector<int> &parent,
                      std::vector<int> &via) const;

  bool is_automorphism(const GroupMap &f) const;

private:
  void finish_table();

  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<Perm> perms_;
};

struct AutBruteOptions {
  std::size_t max_order = 200;
  std::uint64_t max_candidates = 20000000;
};

// All automorphisms of G, canonically sorted.
std::vector<GroupMap> aut_brute(const FiniteGroup &g, AutBruteOptions opts = {});

GroupMap compose_maps(const GroupMap &f, const GroupMap &g); // f after g
GroupMap invert_map(const GroupMap &f);
GroupMap inner_automorphism(const FiniteGroup &g, int e); // x -> e x e^-1

} // namespace wreath
