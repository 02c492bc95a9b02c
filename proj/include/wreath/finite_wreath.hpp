#pragma once

/*
 * Materialized finite wreath products G = A wr_X B for finite A, B, X,
 * with the automorphism-group machinery of the decomposition
 *
 *     Aut(G) = (Der(B, AX) x| Iso_ZB(AX)) x| Aut(B)
 *
 * Module elements are mixed-radix codes (one digit per point and cyclic
 * invariant), the group is indexed by (module code, B element) with a
 * cached multiplication table, and epimorphisms/automorphisms of G are
 * plain image tables, so everything downstream is integer table algebra.
 */

#include "wreath/derivations.hpp"
#include "wreath/finite_action.hpp"
#include "wreath/wreath.hpp"

namespace wreath {

// Backend adapter so the generic ModuleVector/WreathElement templates can
// drive a finite action; points and group elements are indices.
struct FiniteActionBackend {
  const FiniteAction *action = nullptr;

  using Point = int;
  using GroupElt = int;
  static constexpr bool enumerable = true;

  Point act(const GroupElt &g, const Point &x) const { return action->act(g, x); }
  GroupElt identity() const { return action->group().identity(); }
  GroupElt mul(const GroupElt &a, const GroupElt &b) const
  {
    return action->group().mul(a, b);
  }
  GroupElt inv(const GroupElt &a) const { return action->group().inv(a); }
  std::vector<Point> points() const
  {
    std::vector<Point> p(action->npoints());
    for (int i = 0; i < action->npoints(); ++i)
      p[i] = i;
    return p;
  }
};

// A ZB-module endomorphism of AX as a full table over module codes.
using ModuleMap = std::vector<long long>;

class FiniteWreath {
public:
  // max_module bounds |AX| (all module-code computations); the group
  // table is built lazily by group() and bounded by max_group_order.
  FiniteWreath(FiniteAction action, AbelianSpec coeff,
               std::size_t max_module = 4096, std::size_t max_group_order = 4096);

  const FiniteAction &action() const { return action_; }
  const AbelianSpec &coeff() const { return *coeff_; }
  const AbelianSpecPtr &coeff_ptr() const { return coeff_; }
  const FiniteGroup &group() const;

  long long module_size() const { return msize_; }
  int order() const { return static_cast<int>(msize_) * action_.group().order(); }

  int index_of(long long mv, int b) const
  {
    return static_cast<int>(mv) * action_.group().order() + b;
  }
  long long mv_of(int idx) const { return idx / action_.group().order(); }
  int b_of(int idx) const { return idx % action_.group().order(); }

  // module code arithmetic
  long long mv_add(long long a, long long b) const;
  long long mv_neg(long long a) const;
  long long mv_scale(long long a, const BigInt &c) const;
  long long mv_act(int b, long long mv) const;
  // code of the generator a_s at a point
  long long unit_code(std::size_t invariant_index, int point) const;
  // digit of the code at (point, invariant)
  long digit(long long mv, int point, std::size_t invariant_index) const;
  std::size_t ninvariants() const { return radix_.size(); }

  // gamma_m(b) = (1 - b) o m as a table over B
  std::vector<long long> principal_derivation(long long m) const;

  // conversion to the generic template element (tests, reports)
  WreathElement<FiniteActionBackend> decode(int idx) const;

private:
  FiniteAction action_;
  AbelianSpecPtr coeff_;
  std::vector<long> radix_;
  long long asize_ = 1;
  long long msize_ = 1;
  std::size_t max_group_order_;
  mutable FiniteGroup group_;
  mutable bool group_built_ = false;
};

bool module_map_is_linear(const FiniteWreath &w, const ModuleMap &f);
bool module_map_is_equivariant(const FiniteWreath &w, const ModuleMap &f);
bool module_map_is_bijective(const FiniteWreath &w, const ModuleMap &f);

// nu_{b0}(a.x) = a.(b0 * psi(I_{b0})^{-1}(x))
ModuleMap nu_map(const FiniteWreath &w, int b0, const PsiTable &psi);

// delta : b -> nu_b restricted to the center (a subgroup of Iso since
// I_{b} = id there); returns the distinct tables.
std::vector<ModuleMap> delta_center_image(const FiniteWreath &w, const PsiTable &psi);

// rho(sigma)(a.x, b) = (a.psi(sigma)(x), sigma(b)) as a table on G
GroupMap rho_embed(const FiniteWreath &w, std::size_t aut_index, const PsiTable &psi);


// All ZB-module automorphisms of AX, enumerated from generator images
// (order and stabilizer-invariance constraints), canonically sorted.
std::vector<ModuleMap> iso_group(const FiniteWreath &w,
                                 long long max_candidates = 2000000);

struct DecomposeHypotheses {
  bool coefficient_ok = true;      // f.g. abelian A; exponent-2 clause vs D
  bool kernel_classes_ok = true;   // nontrivial classes of D non-abelian
  bool stab_permutation_ok = true; // Aut(B) permutes stabilizers
  bool hopfian_b = true;           // finite groups are Hopfian
  // With exponent-2 coefficients, (b-1)^2 annihilates AX for every b whose
  // square acts trivially, so the module-preservation argument additionally
  // needs every such nontrivial b to have a non-abelian conjugacy class.
  // Without this, automorphisms can move the base module: already for
  // Z/2 wr C2 = D_4 the outer automorphism swaps the two Klein subgroups
  // and the decomposition undercounts Aut(G).
  bool involution_classes_ok = true;

  bool all() const
  {
    return coefficient_ok && kernel_classes_ok && stab_permutation_ok &&
           hopfian_b && involution_classes_ok;
  }
  std::vector<std::string> failing() const;
};

DecomposeHypotheses check_decompose_hypotheses(const FiniteAction &action,
                                               const AbelianSpec &coeff,
                                               const std::vector<GroupMap> &auts);

struct ThetaDecomposition {
  GroupMap sigma;              // automorphism of B
  std::size_t sigma_index = 0; // index into the psi table
  GroupMap theta1;             // rho(sigma), automorphism of G
  GroupMap theta2;             // theta o theta1^{-1}
  std::vector<long long> gamma; // derivation B -> AX extracted from theta2
  ModuleMap theta2_module;      // theta2 restricted to M

  bool recomposition_ok = false;   // theta2 o theta1 == theta
  bool theta2_fixes_b = false;     // pi theta2|_B = id
  bool theta2_module_linear = false;
  bool theta2_module_equivariant = false;
  bool gamma_is_derivation = false;
  bool theta2_module_bijective = false;

  bool consistent() const
  {
    return recomposition_ok && theta2_fixes_b && theta2_module_linear &&
           theta2_module_equivariant && gamma_is_derivation;
  }
};

// Decompose a surjective endomorphism theta of G as theta2 theta1.
// Throws std::domain_error when the decomposition hypotheses fail and
// std::invalid_argument when theta is not a surjective endomorphism.
ThetaDecomposition theta_decompose(const FiniteWreath &w, const GroupMap &theta,
                                   const PsiTable &psi);

struct AutOrderReport {
  DecomposeHypotheses hyps;
  bool valid = false; // formula computed (hypotheses hold)
  BigInt der_order = 0;
  BigInt iso_order = 0;
  BigInt aut_b_order = 0;
  BigInt total = 0; // |Aut(G)| by the decomposition
};

AutOrderReport aut_order_formula(const FiniteWreath &w, const PsiTable &psi);

struct OutOrderReport {
  DecomposeHypotheses hyps;
  bool valid = false;
  BigInt h1_order = 0;
  BigInt iso_order = 0;
  BigInt delta_center_order = 0;
  BigInt iso_mod_delta = 0;
  BigInt out_b_order = 0;
  BigInt total = 0; // |Out(G)| = |H1| |Iso/delta(Z(B))| |Out(B)|

  // brute-force cross check
  BigInt aut_g_brute = 0;
  BigInt center_g = 0;
  BigInt inn_g = 0;
  BigInt out_g_brute = 0;
  bool consistent = false;
};

OutOrderReport out_order(const FiniteWreath &w, const PsiTable &psi,
                         AutBruteOptions aut_opts = {});

} // namespace wreath
