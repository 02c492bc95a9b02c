#include "wreath/intertwiner.hpp"

#include <algorithm>

namespace wreath {

OrbitalBasis intertwiner_basis(const FiniteAction &action)
{
  OrbitalBasis b;
  b.npoints = action.npoints();
  int n = b.npoints;
  b.orbital_of.assign(static_cast<std::size_t>(n) * n, -1);

  const auto &g = action.group();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (b.orbital_of[x * n + y] >= 0)
        continue;
      int id = b.dim++;
      b.reps.emplace_back(x, y);
      b.diagonal.push_back(x == y);
      // orbit of (x,y) under the diagonal action
      std::vector<std::pair<int, int>> queue{{x, y}};
      b.orbital_of[x * n + y] = id;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (int ge : g.generators()) {
          int u = action.act(ge, queue[i].first);
          int v = action.act(ge, queue[i].second);
          if (b.orbital_of[u * n + v] < 0) {
            b.orbital_of[u * n + v] = id;
            queue.emplace_back(u, v);
          }
        }
    }

  // c[i][j][k] = #{ z : (x,z) in O_i, (z,y) in O_j } for (x,y) = rep(O_k)
  b.structure.assign(
      b.dim, std::vector<std::vector<long long>>(b.dim,
                                                 std::vector<long long>(b.dim, 0)));
  for (int k = 0; k < b.dim; ++k) {
    auto [x, y] = b.reps[k];
    for (int z = 0; z < n; ++z) {
      int i = b.orbital(x, z), j = b.orbital(z, y);
      ++b.structure[i][j][k];
    }
  }
  return b;
}

long long burnside_pair_orbit_count(const FiniteAction &action)
{
  long long total = 0;
  for (int e = 0; e < action.group().order(); ++e) {
    long long f = action.fix_count(e);
    total += f * f;
  }
  return total / action.group().order();
}

namespace {

// Elements of M_s(E) in orbital coordinates: flat vector of length s*s*dim,
// index (u,v,i) -> (u*s + v)*dim + i.
template <class F>
struct AlgebraOps {
  const OrbitalBasis &basis;
  const F &f;
  int s;
  int dim;

  using Elem = typename F::Elem;
  using Coords = std::vector<Elem>;

  std::size_t len() const { return static_cast<std::size_t>(s) * s * dim; }

  Coords zero() const { return Coords(len(), f.zero()); }

  Coords identity() const
  {
    auto c = zero();
    for (int u = 0; u < s; ++u)
      for (int i = 0; i < dim; ++i)
        if (basis.diagonal[i])
          c[(u * s + u) * dim + i] = f.one();
    return c;
  }

  Coords mul(const Coords &a, const Coords &b) const
  {
    auto r = zero();
    for (int u = 0; u < s; ++u)
      for (int v = 0; v < s; ++v)
        for (int w = 0; w < s; ++w)
          for (int i = 0; i < dim; ++i) {
            auto ai = a[(u * s + v) * dim + i];
            if (f.is_zero(ai))
              continue;
            for (int j = 0; j < dim; ++j) {
              auto bj = b[(v * s + w) * dim + j];
              if (f.is_zero(bj))
                continue;
              auto prod = f.mul(ai, bj);
              for (int k = 0; k < dim; ++k) {
                long long c = basis.structure[i][j][k];
                if (c == 0)
                  continue;
                auto term = f.mul(prod, f.from_int(BigInt(static_cast<long>(c))));
                auto &slot = r[(u * s + w) * dim + k];
                slot = f.add(slot, term);
              }
            }
          }
    return r;
  }

  // right inverse within the algebra: solve a x = 1 for x in coordinates
  std::optional<Coords> right_inverse(const Coords &a) const
  {
    std::size_t nvars = len();
    auto m = zero_matrix(f, nvars, nvars);
    // column for each unknown coordinate of x
    for (std::size_t col = 0; col < nvars; ++col) {
      Coords e(nvars, f.zero());
      e[col] = f.one();
      auto prod = mul(a, e);
      for (std::size_t row = 0; row < nvars; ++row)
        m[row][col] = prod[row];
    }
    return solve(f, std::move(m), identity());
  }
};

template <class F>
ProbeReport run_probe(const OrbitalBasis &basis, const F &f, int s,
                      const ProbeOptions &opts, std::string ring_name,
                      long long field_size, bool integral_only)
{
  AlgebraOps<F> ops{basis, f, s, basis.dim};
  ProbeReport rep;
  rep.ring = std::move(ring_name);
  rep.matrix_size = s;

  auto is_integral = [&](const typename AlgebraOps<F>::Coords &c) {
    if constexpr (std::is_same_v<F, RationalRing>) {
      for (const auto &e : c)
        if (e.get_den() != 1)
          return false;
      return true;
    } else {
      (void)c;
      return true;
    }
  };

  auto examine = [&](const typename AlgebraOps<F>::Coords &a) {
    ++rep.trials;
    auto x = ops.right_inverse(a);
    if (!x)
      return;
    if (integral_only && !is_integral(*x))
      return;
    ++rep.right_invertible;
    if (ops.mul(*x, a) != ops.identity())
      ++rep.violations;
  };

  std::size_t nvars = ops.len();
  bool can_enumerate = field_size > 0;
  if (can_enumerate) {
    long long total = 1;
    for (std::size_t i = 0; i < nvars && can_enumerate; ++i) {
      total *= field_size;
      if (total > opts.enumerate_limit)
        can_enumerate = false;
    }
  }
  if (can_enumerate) {
    rep.enumerated = true;
    typename AlgebraOps<F>::Coords a(nvars, f.zero());
    std::vector<long> digits(nvars, 0);
    while (true) {
      examine(a);
      std::size_t pos = 0;
      while (pos < nvars && ++digits[pos] == field_size) {
        digits[pos] = 0;
        a[pos] = f.zero();
        ++pos;
      }
      if (pos == nvars)
        break;
      a[pos] = f.from_int(BigInt(digits[pos]));
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> dist(-opts.coord_range, opts.coord_range);
    for (long long t = 0; t < opts.trials; ++t) {
      typename AlgebraOps<F>::Coords a(nvars);
      for (auto &e : a)
        e = f.from_int(BigInt(dist(rng)));
      examine(a);
    }
  }
  return rep;
}

} // namespace

ProbeReport direct_finiteness_probe_fp(const OrbitalBasis &basis, long p, int s,
                                       const ProbeOptions &opts)
{
  FpField f(p);
  return run_probe(basis, f, s, opts, "F_" + std::to_string(p), p, false);
}

ProbeReport direct_finiteness_probe_q(const OrbitalBasis &basis, int s,
                                      const ProbeOptions &opts, bool integral_only)
{
  RationalRing f;
  return run_probe(basis, f, s, opts, integral_only ? "Z" : "Q", 0, integral_only);
}

namespace {

template <class F>
IdempotentReport idempotent_split_impl(const FiniteAction &action, int orbit_index,
                                       const F &f)
{
  const auto &g = action.group();
  if (orbit_index < 0 ||
      orbit_index >= static_cast<int>(action.orbit_reps().size()))
    throw std::invalid_argument("idempotent_split: orbit index out of range");
  auto H = action.stabilizer(action.orbit_reps()[orbit_index]);

  auto inv_order = f.inv(f.from_int(BigInt(static_cast<long>(H.size()))));

  int n = g.order();
  std::vector<typename F::Elem> e(n, f.zero());
  for (int h : H)
    e[h] = inv_order;

  // e * e via group algebra convolution
  std::vector<typename F::Elem> ee(n, f.zero());
  for (int a = 0; a < n; ++a) {
    if (f.is_zero(e[a]))
      continue;
    for (int b = 0; b < n; ++b) {
      if (f.is_zero(e[b]))
        continue;
      int ab = g.mul(a, b);
      ee[ab] = f.add(ee[ab], f.mul(e[a], e[b]));
    }
  }

  IdempotentReport rep;
  rep.is_idempotent = (ee == e);
  rep.orbit_size = static_cast<long long>(action.orbits()[orbit_index].size());

  // rank of right multiplication by e on KB = dim KB e
  auto m = zero_matrix(f, n, n);
  for (int u = 0; u < n; ++u)
    for (int a = 0; a < n; ++a)
      m[u][a] = e[g.mul(g.inv(a), u)];
  rep.module_rank = static_cast<long long>(rank(f, std::move(m)));
  return rep;
}

} // namespace

IdempotentReport idempotent_split_q(const FiniteAction &action, int orbit_index)
{
  RationalRing f;
  return idempotent_split_impl(action, orbit_index, f);
}

IdempotentReport idempotent_split_fp(const FiniteAction &action, int orbit_index,
                                     long p)
{
  auto H = action.stabilizer(action.orbit_reps().at(orbit_index));
  if (H.size() % p == 0)
    throw std::domain_error("idempotent_split: |H| is not invertible mod p");
  FpField f(p);
  return idempotent_split_impl(action, orbit_index, f);
}

} // namespace wreath
