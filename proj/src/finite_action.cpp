#include "wreath/finite_action.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace wreath {

FiniteAction::FiniteAction(FiniteGroup group, std::vector<Perm> element_perms)
: group_(std::move(group)), perms_(std::move(element_perms))
{
  int n = group_.order();
  if (static_cast<int>(perms_.size()) != n)
    throw std::invalid_argument("FiniteAction: one permutation per element required");
  npoints_ = perms_[0].degree();
  for (const auto &p : perms_)
    if (p.degree() != npoints_)
      throw std::invalid_argument("FiniteAction: permutation degree mismatch");
  if (!perms_[0].is_identity())
    throw std::invalid_argument("FiniteAction: identity must act trivially");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (perms_[group_.mul(a, b)] != perms_[a] * perms_[b])
        throw std::invalid_argument("FiniteAction: not a homomorphism to Perm(X)");
  compute_orbits();
}

void FiniteAction::compute_orbits()
{
  orbit_of_.assign(npoints_, -1);
  transversal_.assign(npoints_, 0);
  for (int x = 0; x < npoints_; ++x) {
    if (orbit_of_[x] >= 0)
      continue;
    int id = static_cast<int>(orbits_.size());
    std::vector<int> orbit{x};
    orbit_of_[x] = id;
    transversal_[x] = group_.identity();
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      int y = orbit[i];
      for (int ge : group_.generators()) {
        int z = act(ge, y);
        if (orbit_of_[z] < 0) {
          orbit_of_[z] = id;
          transversal_[z] = group_.mul(ge, transversal_[y]);
          orbit.push_back(z);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    reps_.push_back(x);
    orbits_.push_back(std::move(orbit));
  }
  for (int e = 0; e < group_.order(); ++e)
    if (perms_[e].is_identity())
      kernel_.push_back(e);
}

std::vector<int> FiniteAction::stabilizer(int point) const
{
  std::vector<int> s;
  for (int e = 0; e < group_.order(); ++e)
    if (act(e, point) == point)
      s.push_back(e);
  return s;
}

FiniteAction FiniteAction::from_permutations(int npoints, std::vector<Perm> generators,
                                             std::size_t max_order)
{
  auto g = FiniteGroup::from_permutations(npoints, std::move(generators), max_order);
  auto perms = g.permutations();
  return FiniteAction(std::move(g), std::move(perms));
}

FiniteAction FiniteAction::regular(const FiniteGroup &g)
{
  int n = g.order();
  std::vector<Perm> perms;
  perms.reserve(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x)
      img[x] = g.mul(a, x);
    perms.emplace_back(std::move(img));
  }
  return FiniteAction(g, std::move(perms));
}

FiniteAction FiniteAction::coset_action(const FiniteGroup &g,
                                        const std::vector<int> &subgroup)
{
  int n = g.order();
  std::vector<char> in_sub(n, 0);
  for (int h : subgroup) {
    if (h < 0 || h >= n)
      throw std::invalid_argument("coset_action: subgroup element out of range");
    in_sub[h] = 1;
  }
  if (!in_sub[g.identity()])
    throw std::invalid_argument("coset_action: subgroup must contain the identity");
  for (int a : subgroup)
    for (int b : subgroup)
      if (!in_sub[g.mul(a, b)])
        throw std::invalid_argument("coset_action: not closed under multiplication");

  // enumerate left cosets in order of least representative
  std::vector<int> coset_of(n, -1), reps;
  for (int e = 0; e < n; ++e) {
    if (coset_of[e] >= 0)
      continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int h : subgroup)
      coset_of[g.mul(e, h)] = id;
  }

  int npts = static_cast<int>(reps.size());
  std::vector<Perm> perms;
  perms.reserve(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> img(npts);
    for (int x = 0; x < npts; ++x)
      img[x] = coset_of[g.mul(a, reps[x])];
    perms.emplace_back(std::move(img));
  }
  return FiniteAction(g, std::move(perms));
}

FiniteAction FiniteAction::trivial(const FiniteGroup &g, int npoints)
{
  if (npoints < 1)
    throw std::invalid_argument("trivial action needs at least one point");
  std::vector<Perm> perms(g.order(), Perm(npoints));
  return FiniteAction(g, std::move(perms));
}

FiniteAction FiniteAction::disjoint_union(const FiniteAction &a, const FiniteAction &b)
{
  if (a.group().order() != b.group().order())
    throw std::invalid_argument("disjoint_union: different groups");
  int n = a.group().order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.group().mul(x, y) != b.group().mul(x, y))
        throw std::invalid_argument("disjoint_union: different groups");

  int na = a.npoints(), nb = b.npoints();
  std::vector<Perm> perms;
  perms.reserve(n);
  for (int e = 0; e < n; ++e) {
    std::vector<int> img(na + nb);
    for (int x = 0; x < na; ++x)
      img[x] = a.act(e, x);
    for (int x = 0; x < nb; ++x)
      img[na + x] = na + b.act(e, x);
    perms.emplace_back(std::move(img));
  }
  return FiniteAction(a.group(), std::move(perms));
}

FiniteAction FiniteAction::from_file(const std::string &path, std::size_t max_order)
{
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open action file '" + path + "'");
  return from_stream(in, max_order);
}

FiniteAction FiniteAction::from_stream(std::istream &in, std::size_t max_order)
{
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos)
      line.erase(h);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos)
      continue;
    auto e = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(b, e - b + 1));
  }
  if (lines.empty())
    throw std::invalid_argument("action file: empty input");

  std::istringstream head(lines[0]);
  std::string kw;
  int npoints = 0;
  head >> kw >> npoints;
  if (kw != "n" || npoints < 1)
    throw std::invalid_argument("action file: first line must be 'n <points>'");

  std::vector<Perm> gen_perms;
  std::size_t i = 1;
  for (; i < lines.size() && lines[i].rfind("table", 0) != 0; ++i)
    gen_perms.push_back(Perm::parse_cycles(lines[i], npoints));
  if (gen_perms.empty())
    throw std::invalid_argument("action file: no generators given");

  if (i == lines.size())
    return from_permutations(npoints, std::move(gen_perms), max_order);

  // table block: abstract group + generator element indices
  std::istringstream th(lines[i]);
  std::string tkw;
  std::size_t order = 0;
  th >> tkw >> order;
  if (order < 1)
    throw std::invalid_argument("action file: bad table header");
  std::vector<int> gen_idx;
  int gi;
  while (th >> gi)
    gen_idx.push_back(gi);
  if (gen_idx.size() != gen_perms.size())
    throw std::invalid_argument(
        "action file: table header needs one generator index per permutation line");
  if (order > max_order)
    throw bound_exceeded("action file: group order exceeds bound");

  std::vector<std::vector<int>> table;
  for (std::size_t r = 0; r < order; ++r) {
    if (++i >= lines.size())
      throw std::invalid_argument("action file: table rows missing");
    std::istringstream row(lines[i]);
    std::vector<int> vals;
    int v;
    while (row >> v)
      vals.push_back(v);
    if (vals.size() != order)
      throw std::invalid_argument("action file: bad table row length");
    table.push_back(std::move(vals));
  }

  auto group = FiniteGroup::from_table(std::move(table), gen_idx);

  // extend the generator permutations to every element along a BFS; the
  // FiniteAction constructor then verifies the homomorphism property
  std::vector<Perm> perms(group.order(), Perm(npoints));
  std::vector<int> bfs{0};
  std::vector<char> seen(group.order(), 0);
  seen[0] = 1;
  for (std::size_t q = 0; q < bfs.size(); ++q)
    for (std::size_t j = 0; j < group.generators().size(); ++j) {
      int f = group.mul(bfs[q], group.generators()[j]);
      if (!seen[f]) {
        seen[f] = 1;
        perms[f] = perms[bfs[q]] * gen_perms[j];
        bfs.push_back(f);
      }
    }
  return FiniteAction(std::move(group), std::move(perms));
}

OrbitsReport orbits_stabs(const FiniteAction &action)
{
  OrbitsReport r;
  r.orbits = action.orbits();
  r.reps = action.orbit_reps();
  for (int rep : r.reps)
    r.stabilizers.push_back(action.stabilizer(rep));
  r.kernel = action.kernel();
  return r;
}

LundstromReport lundstrom_check(const FiniteAction &action)
{
  int n = action.npoints();
  std::vector<std::vector<int>> stab(n);
  for (int x = 0; x < n; ++x)
    stab[x] = action.stabilizer(x);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<int> meet;
      std::set_intersection(stab[x].begin(), stab[x].end(), stab[y].begin(),
                            stab[y].end(), std::back_inserter(meet));
      long ix = static_cast<long>(stab[x].size() / meet.size());
      long iy = static_cast<long>(stab[y].size() / meet.size());
      if (ix != iy)
        return {false, std::pair<int, int>{x, y}, std::pair<long, long>{ix, iy}};
    }
  return {true, std::nullopt, std::nullopt};
}

ClassCheckReport nonabelian_class_check(const FiniteAction &action)
{
  ClassCheckReport r;
  const auto &g = action.group();
  for (int d : action.kernel()) {
    if (d == g.identity())
      continue;
    auto cls = g.class_of(d);
    bool nonabelian = false;
    for (std::size_t i = 0; i < cls.size() && !nonabelian; ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (g.mul(cls[i], cls[j]) != g.mul(cls[j], cls[i])) {
          nonabelian = true;
          break;
        }
    r.per_element.emplace_back(d, nonabelian);
    if (!nonabelian)
      r.holds = false;
  }
  return r;
}

bool annihilator_square_test(const FiniteAction &action, const AbelianSpec &A,
                             int b0)
{
  const auto &g = action.group();
  int b0sq = g.mul(b0, b0);
  for (const auto &d : A.invariants()) {
    for (int x = 0; x < action.npoints(); ++x) {
      // (b0 - 1)^2 (a.x) = a.(b0^2 x) - 2 a.(b0 x) + a.x
      std::map<int, BigInt> coeff;
      coeff[action.act(b0sq, x)] += 1;
      coeff[action.act(b0, x)] -= 2;
      coeff[x] += 1;
      for (auto &[pt, c] : coeff) {
        if (d != 0)
          mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (c != 0)
          return false;
      }
    }
  }
  return true;
}

StabPermReport stab_permutation_check(const FiniteAction &action,
                                      const std::vector<GroupMap> &auts)
{
  std::set<std::vector<int>> stabs;
  int n = action.npoints();
  std::vector<std::vector<int>> stab(n);
  for (int x = 0; x < n; ++x) {
    stab[x] = action.stabilizer(x);
    stabs.insert(stab[x]);
  }
  for (std::size_t s = 0; s < auts.size(); ++s) {
    for (int x = 0; x < n; ++x) {
      std::vector<int> image;
      image.reserve(stab[x].size());
      for (int h : stab[x])
        image.push_back(auts[s][h]);
      std::sort(image.begin(), image.end());
      if (!stabs.count(image))
        return {false, std::pair<std::size_t, int>{s, x}};
    }
  }
  return {true, std::nullopt};
}

Perm psi_construct(const FiniteAction &action, const GroupMap &sigma)
{
  const auto &g = action.group();
  const auto &orbits = action.orbits();
  const auto &reps = action.orbit_reps();
  std::size_t norb = orbits.size();

  std::vector<std::vector<int>> stab(norb);
  for (std::size_t i = 0; i < norb; ++i)
    stab[i] = action.stabilizer(reps[i]);

  std::vector<char> used(norb, 0);
  std::vector<int> img(action.npoints(), -1);

  for (std::size_t i = 0; i < norb; ++i) {
    std::vector<int> sigmaH;
    sigmaH.reserve(stab[i].size());
    for (int h : stab[i])
      sigmaH.push_back(sigma[h]);
    std::sort(sigmaH.begin(), sigmaH.end());

    bool found = false;
    for (std::size_t j = 0; j < norb && !found; ++j) {
      if (used[j] || stab[j].size() != sigmaH.size())
        continue;
      for (int g0 = 0; g0 < g.order(); ++g0) {
        std::vector<int> conj;
        conj.reserve(stab[j].size());
        for (int h : stab[j])
          conj.push_back(g.conj(g0, h));
        std::sort(conj.begin(), conj.end());
        if (conj == sigmaH) {
          used[j] = 1;
          // psi(g_y * x_i) = (sigma(g_y) g0) * x_j
          for (int y : orbits[i])
            img[y] = action.act(g.mul(sigma[action.transversal(y)], g0), reps[j]);
          found = true;
          break;
        }
      }
    }
    if (!found)
      throw std::domain_error(
          "psi_construct: sigma(stab) is not conjugate to any unused orbit "
          "stabilizer; the stabilizer permutation condition fails");
  }

  Perm psi{std::vector<int>(img.begin(), img.end())};
  // compatibility law, exhaustively
  for (int e = 0; e < g.order(); ++e)
    for (int x = 0; x < action.npoints(); ++x)
      if (psi(action.act(e, x)) != action.act(sigma[e], psi(x)))
        throw std::logic_error("psi_construct: compatibility law violated");
  return psi;
}

std::size_t PsiTable::index_of(const GroupMap &sigma) const
{
  auto it = std::lower_bound(auts.begin(), auts.end(), sigma);
  if (it == auts.end() || *it != sigma)
    throw std::invalid_argument("PsiTable: map is not a recorded automorphism");
  return static_cast<std::size_t>(it - auts.begin());
}

std::size_t PsiTable::compose(std::size_t i, std::size_t j) const
{
  return index_of(compose_maps(auts[i], auts[j]));
}

std::size_t PsiTable::inverse(std::size_t i) const
{
  return index_of(invert_map(auts[i]));
}

PsiTable build_psi_table(const FiniteAction &action, std::vector<GroupMap> auts,
                         std::size_t max_aut)
{
  if (auts.size() > max_aut)
    throw bound_exceeded("build_psi_table: automorphism group too large");
  PsiTable t;
  t.auts = std::move(auts);
  std::sort(t.auts.begin(), t.auts.end());
  t.psi.reserve(t.auts.size());
  for (const auto &sigma : t.auts)
    t.psi.push_back(psi_construct(action, sigma));

  t.multiplicative = true;
  for (std::size_t i = 0; i < t.auts.size() && t.multiplicative; ++i)
    for (std::size_t j = 0; j < t.auts.size(); ++j) {
      auto k = t.index_of(compose_maps(t.auts[i], t.auts[j]));
      if (t.psi[k] != t.psi[i] * t.psi[j]) {
        t.multiplicative = false;
        break;
      }
    }
  return t;
}

} // namespace wreath
