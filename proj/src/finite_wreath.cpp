#include "wreath/finite_wreath.hpp"

#include <algorithm>
#include <set>

namespace wreath {

FiniteWreath::FiniteWreath(FiniteAction action, AbelianSpec coeff,
                           std::size_t max_module, std::size_t max_group_order)
: action_(std::move(action)),
  coeff_(std::make_shared<AbelianSpec>(std::move(coeff))),
  max_group_order_(max_group_order)
{
  if (!coeff_->is_finite())
    throw std::invalid_argument("FiniteWreath: coefficient group must be finite");
  for (const auto &d : coeff_->invariants()) {
    if (!d.fits_slong_p())
      throw bound_exceeded("FiniteWreath: invariant too large");
    radix_.push_back(d.get_si());
    if (asize_ > static_cast<long long>(max_module))
      throw bound_exceeded("FiniteWreath: coefficient group too large");
    asize_ *= radix_.back();
  }

  int npts = action_.npoints();
  for (int i = 0; i < npts; ++i) {
    if (asize_ > 1 && msize_ > static_cast<long long>(max_module) / asize_)
      throw bound_exceeded("FiniteWreath: module size exceeds bound " +
                           std::to_string(max_module));
    msize_ *= asize_;
  }
}

const FiniteGroup &FiniteWreath::group() const
{
  if (group_built_)
    return group_;

  int nb = action_.group().order();
  long long order = msize_ * nb;
  if (order > static_cast<long long>(max_group_order_))
    throw bound_exceeded("FiniteWreath: group order " + std::to_string(order) +
                         " exceeds bound " + std::to_string(max_group_order_));

  // multiplication table: (m1,b1)(m2,b2) = (m1 + b1 o m2, b1 b2)
  int n = static_cast<int>(order);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::vector<long long>> acted(nb, std::vector<long long>(msize_));
  for (int b = 0; b < nb; ++b)
    for (long long m = 0; m < msize_; ++m)
      acted[b][m] = mv_act(b, m);
  for (long long m1 = 0; m1 < msize_; ++m1)
    for (int b1 = 0; b1 < nb; ++b1) {
      int row = index_of(m1, b1);
      for (long long m2 = 0; m2 < msize_; ++m2) {
        long long part = mv_add(m1, acted[b1][m2]);
        for (int b2 = 0; b2 < nb; ++b2)
          table[row][index_of(m2, b2)] =
              index_of(part, action_.group().mul(b1, b2));
      }
    }

  // generators: module units at orbit representatives, plus B generators
  std::vector<int> gens;
  for (std::size_t s = 0; s < radix_.size(); ++s)
    for (int rep : action_.orbit_reps())
      gens.push_back(index_of(unit_code(s, rep), 0));
  for (int ge : action_.group().generators())
    gens.push_back(index_of(0, ge));

  group_ = FiniteGroup::from_table(std::move(table), std::move(gens));
  group_built_ = true;
  return group_;
}

long long FiniteWreath::mv_add(long long a, long long b) const
{
  long long r = 0, weight = 1;
  int npts = action_.npoints();
  for (int x = 0; x < npts; ++x)
    for (std::size_t s = 0; s < radix_.size(); ++s) {
      long q = radix_[s];
      long da = a % q, db = b % q;
      a /= q;
      b /= q;
      r += ((da + db) % q) * weight;
      weight *= q;
    }
  return r;
}

long long FiniteWreath::mv_neg(long long a) const
{
  long long r = 0, weight = 1;
  int npts = action_.npoints();
  for (int x = 0; x < npts; ++x)
    for (std::size_t s = 0; s < radix_.size(); ++s) {
      long q = radix_[s];
      long da = a % q;
      a /= q;
      r += ((q - da) % q) * weight;
      weight *= q;
    }
  return r;
}

long long FiniteWreath::mv_scale(long long a, const BigInt &c) const
{
  long long r = 0, weight = 1;
  int npts = action_.npoints();
  for (int x = 0; x < npts; ++x)
    for (std::size_t s = 0; s < radix_.size(); ++s) {
      long q = radix_[s];
      long da = a % q;
      a /= q;
      BigInt scaled = BigInt(da) * c;
      mpz_fdiv_r_ui(scaled.get_mpz_t(), scaled.get_mpz_t(),
                    static_cast<unsigned long>(q));
      r += scaled.get_si() * weight;
      weight *= q;
    }
  return r;
}

long long FiniteWreath::mv_act(int b, long long mv) const
{
  int npts = action_.npoints();
  long long r = 0;
  std::vector<long long> point_weight(npts);
  long long w = 1;
  for (int x = 0; x < npts; ++x) {
    point_weight[x] = w;
    w *= asize_;
  }
  for (int x = 0; x < npts; ++x) {
    long long pc = mv % asize_; // the point's A-coordinate block
    mv /= asize_;
    r += pc * point_weight[action_.act(b, x)];
  }
  return r;
}

long long FiniteWreath::unit_code(std::size_t invariant_index, int point) const
{
  long long weight = 1;
  for (int x = 0; x < point; ++x)
    weight *= asize_;
  for (std::size_t s = 0; s < invariant_index; ++s)
    weight *= radix_[s];
  return weight;
}

long FiniteWreath::digit(long long mv, int point, std::size_t invariant_index) const
{
  for (int x = 0; x < point; ++x)
    mv /= asize_;
  long long pc = mv % asize_;
  for (std::size_t s = 0; s < invariant_index; ++s)
    pc /= radix_[s];
  return static_cast<long>(pc % radix_[invariant_index]);
}

std::vector<long long> FiniteWreath::principal_derivation(long long m) const
{
  int nb = action_.group().order();
  std::vector<long long> gamma(nb);
  for (int b = 0; b < nb; ++b)
    gamma[b] = mv_add(m, mv_neg(mv_act(b, m)));
  return gamma;
}

WreathElement<FiniteActionBackend> FiniteWreath::decode(int idx) const
{
  ModuleVector<FiniteActionBackend> mv(coeff_);
  long long code = mv_of(idx);
  for (int x = 0; x < action_.npoints(); ++x) {
    std::vector<BigInt> coords;
    for (std::size_t s = 0; s < radix_.size(); ++s)
      coords.emplace_back(digit(code, x, s));
    mv.add_term(x, AbelianElement(coeff_, std::move(coords)));
  }
  return {std::move(mv), b_of(idx)};
}

bool module_map_is_linear(const FiniteWreath &w, const ModuleMap &f)
{
  long long n = w.module_size();
  if (f[0] != 0)
    return false;
  if (n <= 1024) {
    for (long long a = 0; a < n; ++a)
      for (long long b = a; b < n; ++b)
        if (f[w.mv_add(a, b)] != w.mv_add(f[a], f[b]))
          return false;
    return true;
  }
  // generator-based check for large modules
  for (long long a = 0; a < n; ++a)
    for (std::size_t s = 0; s < w.ninvariants(); ++s)
      for (int x = 0; x < w.action().npoints(); ++x) {
        long long u = w.unit_code(s, x);
        if (f[w.mv_add(a, u)] != w.mv_add(f[a], f[u]))
          return false;
      }
  return true;
}

bool module_map_is_equivariant(const FiniteWreath &w, const ModuleMap &f)
{
  for (int b = 0; b < w.action().group().order(); ++b)
    for (long long a = 0; a < w.module_size(); ++a)
      if (f[w.mv_act(b, a)] != w.mv_act(b, f[a]))
        return false;
  return true;
}

bool module_map_is_bijective(const FiniteWreath &w, const ModuleMap &f)
{
  std::vector<char> seen(w.module_size(), 0);
  for (long long v : f) {
    if (v < 0 || v >= w.module_size() || seen[v])
      return false;
    seen[v] = 1;
  }
  return true;
}

ModuleMap nu_map(const FiniteWreath &w, int b0, const PsiTable &psi)
{
  const auto &g = w.action().group();
  GroupMap conj(g.order());
  for (int x = 0; x < g.order(); ++x)
    conj[x] = g.conj(b0, x);
  auto psi_inv = psi.psi[psi.index_of(conj)].inverse();

  int npts = w.action().npoints();
  // images of the unit generators
  std::vector<std::vector<long long>> unit_img(w.ninvariants(),
                                               std::vector<long long>(npts));
  for (std::size_t s = 0; s < w.ninvariants(); ++s)
    for (int x = 0; x < npts; ++x)
      unit_img[s][x] = w.unit_code(s, w.action().act(b0, psi_inv(x)));

  ModuleMap f(w.module_size());
  for (long long code = 0; code < w.module_size(); ++code) {
    long long img = 0;
    for (int x = 0; x < npts; ++x)
      for (std::size_t s = 0; s < w.ninvariants(); ++s) {
        long d = w.digit(code, x, s);
        if (d)
          img = w.mv_add(img, w.mv_scale(unit_img[s][x], BigInt(d)));
      }
    f[code] = img;
  }
  return f;
}

std::vector<ModuleMap> delta_center_image(const FiniteWreath &w, const PsiTable &psi)
{
  std::set<ModuleMap> image;
  for (int z : w.action().group().center())
    image.insert(nu_map(w, z, psi));
  return {image.begin(), image.end()};
}

GroupMap rho_embed(const FiniteWreath &w, std::size_t aut_index, const PsiTable &psi)
{
  const auto &sigma = psi.auts[aut_index];
  const auto &p = psi.psi[aut_index];
  int npts = w.action().npoints();

  GroupMap f(w.order());
  for (int idx = 0; idx < w.order(); ++idx) {
    long long code = w.mv_of(idx);
    long long img = 0;
    for (int x = 0; x < npts; ++x)
      for (std::size_t s = 0; s < w.ninvariants(); ++s) {
        long d = w.digit(code, x, s);
        if (d)
          img = w.mv_add(img, w.mv_scale(w.unit_code(s, p(x)), BigInt(d)));
      }
    f[idx] = w.index_of(img, sigma[w.b_of(idx)]);
  }
  return f;
}


std::vector<ModuleMap> iso_group(const FiniteWreath &w, long long max_candidates)
{
  const auto &action = w.action();
  const auto &reps = action.orbit_reps();
  std::size_t ninv = w.ninvariants();
  std::size_t slots = ninv * reps.size();

  // candidate images per (invariant, orbit rep): killed by the invariant
  // and fixed by the stabilizer
  std::vector<std::vector<long long>> candidates(slots);
  long long tuples = 1;
  for (std::size_t s = 0; s < ninv; ++s) {
    BigInt d = w.coeff().invariants()[s];
    for (std::size_t i = 0; i < reps.size(); ++i) {
      auto stab = action.stabilizer(reps[i]);
      auto &c = candidates[s * reps.size() + i];
      for (long long code = 0; code < w.module_size(); ++code) {
        if (w.mv_scale(code, d) != 0)
          continue;
        bool inv = true;
        for (int h : stab)
          if (w.mv_act(h, code) != code) {
            inv = false;
            break;
          }
        if (inv)
          c.push_back(code);
      }
      tuples *= static_cast<long long>(c.size());
      if (tuples > max_candidates)
        throw bound_exceeded("iso_group: candidate space too large");
    }
  }

  int npts = action.npoints();
  std::vector<ModuleMap> isos;
  std::vector<std::size_t> idx(slots, 0);
  while (true) {
    // images of all unit generators, translated along the transversal
    std::vector<std::vector<long long>> unit_img(ninv,
                                                 std::vector<long long>(npts));
    for (std::size_t s = 0; s < ninv; ++s)
      for (int y = 0; y < npts; ++y) {
        std::size_t slot = s * reps.size() + action.orbit_of(y);
        long long wimg = candidates[slot][idx[slot]];
        unit_img[s][y] = w.mv_act(action.transversal(y), wimg);
      }

    ModuleMap f(w.module_size());
    for (long long code = 0; code < w.module_size(); ++code) {
      long long img = 0;
      for (int y = 0; y < npts; ++y)
        for (std::size_t s = 0; s < ninv; ++s) {
          long d = w.digit(code, y, s);
          if (d)
            img = w.mv_add(img, w.mv_scale(unit_img[s][y], BigInt(d)));
        }
      f[code] = img;
    }
    if (module_map_is_bijective(w, f))
      isos.push_back(std::move(f));

    std::size_t pos = 0;
    while (pos < slots && ++idx[pos] == candidates[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == slots)
      break;
  }
  std::sort(isos.begin(), isos.end());
  return isos;
}

std::vector<std::string> DecomposeHypotheses::failing() const
{
  std::vector<std::string> f;
  if (!hopfian_b)
    f.push_back("hopfian_b");
  if (!coefficient_ok)
    f.push_back("coefficient_exponent2");
  if (!stab_permutation_ok)
    f.push_back("stabilizer_permutation");
  if (!kernel_classes_ok)
    f.push_back("kernel_nonabelian_classes");
  if (!involution_classes_ok)
    f.push_back("exponent2_involution_classes");
  return f;
}

DecomposeHypotheses check_decompose_hypotheses(const FiniteAction &action,
                                               const AbelianSpec &coeff,
                                               const std::vector<GroupMap> &auts)
{
  DecomposeHypotheses h;
  h.hopfian_b = true; // finite groups are Hopfian

  auto expo = coeff.exponent();
  if (expo && *expo == 2) {
    const auto &g = action.group();
    const auto &kernel = action.kernel();
    for (int d : kernel)
      if (d != g.identity() && g.element_order(d) == 2) {
        h.coefficient_ok = false;
        break;
      }
    // nontrivial b with b^2 in D must have a non-abelian class
    for (int b = 1; b < g.order() && h.involution_classes_ok; ++b) {
      int bsq = g.mul(b, b);
      if (!std::binary_search(kernel.begin(), kernel.end(), bsq))
        continue;
      auto cls = g.class_of(b);
      bool nonabelian = false;
      for (std::size_t i = 0; i < cls.size() && !nonabelian; ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j)
          if (g.mul(cls[i], cls[j]) != g.mul(cls[j], cls[i])) {
            nonabelian = true;
            break;
          }
      if (!nonabelian)
        h.involution_classes_ok = false;
    }
  }
  h.kernel_classes_ok = nonabelian_class_check(action).holds;
  h.stab_permutation_ok = stab_permutation_check(action, auts).holds;
  return h;
}

ThetaDecomposition theta_decompose(const FiniteWreath &w, const GroupMap &theta,
                                   const PsiTable &psi)
{
  auto hyps = check_decompose_hypotheses(w.action(), w.coeff(), psi.auts);
  if (!hyps.all()) {
    std::string msg = "theta_decompose: hypotheses fail:";
    for (const auto &f : hyps.failing())
      msg += " " + f;
    throw std::domain_error(msg);
  }

  const auto &G = w.group();
  if (!G.is_automorphism(theta))
    throw std::invalid_argument(
        "theta_decompose: map is not a surjective endomorphism of G");

  const auto &B = w.action().group();
  int nb = B.order();

  ThetaDecomposition d;
  d.sigma.resize(nb);
  for (int b = 0; b < nb; ++b)
    d.sigma[b] = w.b_of(theta[w.index_of(0, b)]);
  d.sigma_index = psi.index_of(d.sigma);

  d.theta1 = rho_embed(w, d.sigma_index, psi);
  auto theta1_inv = invert_map(d.theta1);
  d.theta2 = compose_maps(theta, theta1_inv);

  d.recomposition_ok = compose_maps(d.theta2, d.theta1) == theta;

  d.gamma.resize(nb);
  d.theta2_fixes_b = true;
  for (int b = 0; b < nb; ++b) {
    int img = d.theta2[w.index_of(0, b)];
    d.gamma[b] = w.mv_of(img);
    if (w.b_of(img) != b)
      d.theta2_fixes_b = false;
  }

  d.theta2_module.resize(w.module_size());
  for (long long m = 0; m < w.module_size(); ++m) {
    int img = d.theta2[w.index_of(m, 0)];
    d.theta2_module[m] = w.mv_of(img);
    if (w.b_of(img) != 0)
      d.theta2_fixes_b = false;
  }

  d.theta2_module_linear = module_map_is_linear(w, d.theta2_module);
  d.theta2_module_equivariant = module_map_is_equivariant(w, d.theta2_module);
  d.theta2_module_bijective = module_map_is_bijective(w, d.theta2_module);

  d.gamma_is_derivation = true;
  for (int b1 = 0; b1 < nb && d.gamma_is_derivation; ++b1)
    for (int b2 = 0; b2 < nb; ++b2) {
      long long expect = w.mv_add(d.gamma[b1], w.mv_act(b1, d.gamma[b2]));
      if (d.gamma[B.mul(b1, b2)] != expect) {
        d.gamma_is_derivation = false;
        break;
      }
    }
  return d;
}

AutOrderReport aut_order_formula(const FiniteWreath &w, const PsiTable &psi)
{
  AutOrderReport r;
  r.hyps = check_decompose_hypotheses(w.action(), w.coeff(), psi.auts);
  if (!r.hyps.all())
    return r;

  auto h1 = derivations_h1(w.action(), w.coeff());
  r.der_order = h1.der_torsion;
  r.iso_order = BigInt(static_cast<long>(iso_group(w).size()));
  r.aut_b_order = BigInt(static_cast<long>(psi.auts.size()));
  r.total = r.der_order * r.iso_order * r.aut_b_order;
  r.valid = true;
  return r;
}

OutOrderReport out_order(const FiniteWreath &w, const PsiTable &psi,
                         AutBruteOptions aut_opts)
{
  OutOrderReport r;
  r.hyps = check_decompose_hypotheses(w.action(), w.coeff(), psi.auts);
  if (!r.hyps.all())
    return r;

  const auto &B = w.action().group();
  auto h1 = derivations_h1(w.action(), w.coeff());
  r.h1_order = h1.h1_torsion;
  r.iso_order = BigInt(static_cast<long>(iso_group(w).size()));
  r.delta_center_order =
      BigInt(static_cast<long>(delta_center_image(w, psi).size()));
  r.iso_mod_delta = r.iso_order / r.delta_center_order;
  BigInt inn_b = BigInt(B.order()) / BigInt(static_cast<long>(B.center().size()));
  r.out_b_order = BigInt(static_cast<long>(psi.auts.size())) / inn_b;
  r.total = r.h1_order * r.iso_mod_delta * r.out_b_order;
  r.valid = true;

  r.aut_g_brute = BigInt(static_cast<long>(aut_brute(w.group(), aut_opts).size()));
  r.center_g = BigInt(static_cast<long>(w.group().center().size()));
  r.inn_g = BigInt(w.order()) / r.center_g;
  r.out_g_brute = r.aut_g_brute / r.inn_g;
  r.consistent = (r.out_g_brute == r.total);
  return r;
}

} // namespace wreath
