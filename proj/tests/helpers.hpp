#pragma once

// Shared test utilities: seeded generators for random exact values.

#include "wreath/bs.hpp"
#include "wreath/scalars.hpp"

#include <random>

namespace testutil {

using wreath::BigInt;
using wreath::BSElement;
using wreath::LocalizedInt;

inline std::mt19937_64 rng(std::uint64_t seed = 0) { return std::mt19937_64(seed); }

inline long rand_int(std::mt19937_64 &g, long lo, long hi)
{
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline LocalizedInt rand_localized(std::mt19937_64 &g, long k, long num_range = 50,
                                   long max_exp = 4)
{
  return LocalizedInt(k, BigInt(rand_int(g, -num_range, num_range)),
                      rand_int(g, 0, max_exp));
}

inline BSElement rand_bs(std::mt19937_64 &g, long k, long level_range = 4)
{
  return BSElement(rand_localized(g, k, 30, 3), rand_int(g, -level_range, level_range));
}

// Independent extended-gcd oracle for modular inverses.
inline long egcd_inverse(long a, long n)
{
  long r0 = n, r1 = ((a % n) + n) % n, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1; r1 = r2; s0 = s1; s1 = s2;
  }
  if (r0 != 1)
    return -1;
  return ((s0 % n) + n) % n;
}

} // namespace testutil
