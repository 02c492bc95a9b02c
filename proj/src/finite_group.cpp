#include "wreath/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace wreath {

FiniteGroup FiniteGroup::from_permutations(int npoints, std::vector<Perm> generators,
                                           std::size_t max_order)
{
  if (generators.empty())
    throw std::invalid_argument("FiniteGroup: empty generator list");
  for (const auto &g : generators)
    if (g.degree() != npoints)
      throw std::invalid_argument("FiniteGroup: generator degree mismatch");

  FiniteGroup G;
  G.perms_.push_back(Perm(npoints));
  std::map<Perm, int> index{{G.perms_[0], 0}};

  // BFS closure
  for (std::size_t i = 0; i < G.perms_.size(); ++i) {
    for (const auto &g : generators) {
      Perm p = G.perms_[i] * g;
      if (index.emplace(p, static_cast<int>(G.perms_.size())).second) {
        G.perms_.push_back(std::move(p));
        if (G.perms_.size() > max_order)
          throw bound_exceeded("FiniteGroup: order exceeds " +
                               std::to_string(max_order));
      }
    }
  }

  int n = static_cast<int>(G.perms_.size());
  G.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      G.table_[a][b] = index.at(G.perms_[a] * G.perms_[b]);

  for (const auto &g : generators)
    G.gens_.push_back(index.at(g));

  G.finish_table();
  return G;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<int> generator_indices)
{
  FiniteGroup G;
  G.table_ = std::move(table);
  int n = static_cast<int>(G.table_.size());
  if (n == 0)
    throw std::invalid_argument("FiniteGroup: empty table");
  for (const auto &row : G.table_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("FiniteGroup: table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("FiniteGroup: table entry out of range");
  }
  for (int i = 0; i < n; ++i)
    if (G.table_[0][i] != i || G.table_[i][0] != i)
      throw std::invalid_argument("FiniteGroup: element 0 is not an identity");
  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (G.table_[G.table_[a][b]][c] != G.table_[a][G.table_[b][c]])
            throw std::invalid_argument("FiniteGroup: table is not associative");
  }

  G.finish_table();

  if (generator_indices.empty())
    G.gens_ = G.small_generating_set();
  else {
    for (int g : generator_indices)
      if (g < 0 || g >= n)
        throw std::invalid_argument("FiniteGroup: generator index out of range");
    G.gens_ = std::move(generator_indices);
    if (G.closure(G.gens_).size() != static_cast<std::size_t>(n))
      throw std::invalid_argument(
          "FiniteGroup: designated generators do not generate the group");
  }
  return G;
}

void FiniteGroup::finish_table()
{
  int n = order();
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0)
      throw std::invalid_argument("FiniteGroup: element without inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(int n)
{
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = (i + 1) % n;
  return from_permutations(n, {Perm(std::move(img))});
}

FiniteGroup FiniteGroup::symmetric(int n, std::size_t max_order)
{
  if (n < 2)
    throw std::invalid_argument("symmetric: n must be >= 2");
  std::vector<int> swap01(n), cyc(n);
  for (int i = 0; i < n; ++i) {
    swap01[i] = i;
    cyc[i] = (i + 1) % n;
  }
  std::swap(swap01[0], swap01[1]);
  std::vector<Perm> gens{Perm(std::move(swap01))};
  if (n > 2)
    gens.push_back(Perm(std::move(cyc)));
  return from_permutations(n, std::move(gens), max_order);
}

FiniteGroup FiniteGroup::dihedral(int n)
{
  if (n < 3)
    throw std::invalid_argument("dihedral: n must be >= 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return from_permutations(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

int FiniteGroup::element_order(int a) const
{
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const
{
  int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

std::vector<int> FiniteGroup::center() const
{
  std::vector<int> z;
  int n = order();
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int b = 0; b < n && central; ++b)
      central = mul(a, b) == mul(b, a);
    if (central)
      z.push_back(a);
  }
  return z;
}

std::vector<int> FiniteGroup::class_of(int a) const
{
  std::set<int> cls;
  for (int g = 0; g < order(); ++g)
    cls.insert(conj(g, a));
  return {cls.begin(), cls.end()};
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const
{
  std::vector<char> seen(order(), 0);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < order(); ++a) {
    if (seen[a])
      continue;
    auto cls = class_of(a);
    for (int x : cls)
      seen[x] = 1;
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<int> FiniteGroup::closure(const std::vector<int> &seed) const
{
  std::vector<char> in(order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (int s : seed)
    if (!in[s]) {
      in[s] = 1;
      elems.push_back(s);
    }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : seed) {
      int p = mul(elems[i], s);
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::vector<int>> FiniteGroup::all_subgroups(std::size_t max_count) const
{
  std::set<std::vector<int>> found;
  found.insert(std::vector<int>{0});
  std::vector<std::vector<int>> queue{{0}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto sub = queue[i];
    for (int g = 1; g < order(); ++g) {
      if (std::binary_search(sub.begin(), sub.end(), g))
        continue;
      auto seed = sub;
      seed.push_back(g);
      auto bigger = closure(seed);
      if (found.insert(bigger).second) {
        if (found.size() > max_count)
          throw bound_exceeded("all_subgroups: too many subgroups");
        queue.push_back(std::move(bigger));
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<int> FiniteGroup::small_generating_set() const
{
  int n = order();
  if (n == 1)
    return {};
  // single generator?
  for (int a = 1; a < n; ++a)
    if (element_order(a) == n)
      return {a};
  // pair search for small orders
  if (n <= 300) {
    for (int a = 1; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (closure({a, b}).size() == static_cast<std::size_t>(n))
          return {a, b};
  }
  // greedy fallback
  std::vector<int> gens;
  std::vector<int> cur{0};
  while (cur.size() < static_cast<std::size_t>(n)) {
    for (int a = 1; a < n; ++a)
      if (!std::binary_search(cur.begin(), cur.end(), a)) {
        gens.push_back(a);
        break;
      }
    cur = closure(gens);
  }
  return gens;
}

void FiniteGroup::spanning_words(const std::vector<int> &gens,
                                 std::vector<int> &parent, std::vector<int> &via) const
{
  int n = order();
  parent.assign(n, -1);
  via.assign(n, -1);
  std::vector<int> queue{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int e = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      int f = mul(e, gens[j]);
      if (!seen[f]) {
        seen[f] = 1;
        parent[f] = e;
        via[f] = static_cast<int>(j);
        queue.push_back(f);
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("spanning_words: generators do not generate");
}

bool FiniteGroup::is_automorphism(const GroupMap &f) const
{
  int n = order();
  if (static_cast<int>(f.size()) != n)
    return false;
  std::vector<char> seen(n, 0);
  for (int v : f) {
    if (v < 0 || v >= n || seen[v])
      return false;
    seen[v] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f[mul(a, b)] != mul(f[a], f[b]))
        return false;
  return true;
}

GroupMap compose_maps(const GroupMap &f, const GroupMap &g)
{
  GroupMap r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    r[i] = f[g[i]];
  return r;
}

GroupMap invert_map(const GroupMap &f)
{
  GroupMap r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    r[f[i]] = static_cast<int>(i);
  return r;
}

GroupMap inner_automorphism(const FiniteGroup &g, int e)
{
  GroupMap f(g.order());
  for (int x = 0; x < g.order(); ++x)
    f[x] = g.conj(e, x);
  return f;
}

std::vector<GroupMap> aut_brute(const FiniteGroup &g, AutBruteOptions opts)
{
  int n = g.order();
  if (static_cast<std::size_t>(n) > opts.max_order)
    throw bound_exceeded("aut_brute: group order " + std::to_string(n) +
                         " exceeds bound " + std::to_string(opts.max_order));
  if (n == 1)
    return {GroupMap{0}};

  auto gens = g.small_generating_set();
  std::vector<int> parent, via;
  g.spanning_words(gens, parent, via);

  // invariant profile (order, class size) preserved by automorphisms
  std::vector<std::pair<int, int>> profile(n);
  for (int a = 0; a < n; ++a)
    profile[a] = {g.element_order(a), static_cast<int>(g.class_of(a).size())};

  std::vector<std::vector<int>> candidates;
  std::uint64_t tuples = 1;
  for (int ge : gens) {
    std::vector<int> c;
    for (int a = 0; a < n; ++a)
      if (profile[a] == profile[ge])
        c.push_back(a);
    tuples *= c.size();
    if (tuples > opts.max_candidates)
      throw bound_exceeded("aut_brute: candidate space too large");
    candidates.push_back(std::move(c));
  }

  // BFS order so parents are mapped before children
  std::vector<int> bfs_order;
  bfs_order.reserve(n);
  {
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int e = queue[i];
      bfs_order.push_back(e);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        int f = g.mul(e, gens[j]);
        if (!seen[f]) {
          seen[f] = 1;
          queue.push_back(f);
        }
      }
    }
  }

  std::vector<GroupMap> auts;
  std::vector<std::size_t> idx(gens.size(), 0);
  GroupMap f(n);
  std::vector<char> hit(n);
  while (true) {
    // extend generator images along spanning words
    f[0] = 0;
    for (int e : bfs_order)
      if (e != 0)
        f[e] = g.mul(f[parent[e]], candidates[via[e]][idx[via[e]]]);

    bool ok = true;
    std::fill(hit.begin(), hit.end(), 0);
    for (int v : f) {
      if (hit[v]) {
        ok = false;
        break;
      }
      hit[v] = 1;
    }
    if (ok) {
      for (int a = 0; a < n && ok; ++a)
        for (std::size_t j = 0; j < gens.size(); ++j) {
          int ge = candidates[j][idx[j]];
          if (f[g.mul(a, gens[j])] != g.mul(f[a], ge)) {
            ok = false;
            break;
          }
        }
    }
    if (ok)
      auts.push_back(f);

    // odometer
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == candidates[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size())
      break;
  }

  std::sort(auts.begin(), auts.end());
  return auts;
}

} // namespace wreath
