#include "wreath/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace wreath {

AbelianSpec AbelianSpec::parse(const std::string &text)
{
  std::vector<BigInt> inv;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("AbelianSpec: empty entry in '" + text + "'");
    try {
      inv.emplace_back(tok.substr(b, e - b + 1));
    } catch (const std::invalid_argument &) {
      throw std::invalid_argument("AbelianSpec: bad entry '" + tok + "'");
    }
  }
  if (inv.empty())
    throw std::invalid_argument("AbelianSpec: empty invariant list");
  return AbelianSpec(std::move(inv));
}

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n)
{
  if (n < 1)
    throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<BigInt, unsigned>> fs;
  BigInt p = 2;
  while (p * p <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      unsigned e = 0;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++e;
      }
      fs.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1)
    fs.emplace_back(n, 1);
  return fs;
}

std::map<BigInt, AbelianSpec> AbelianSpec::primary_decompose() const
{
  std::map<BigInt, std::vector<BigInt>> parts;
  for (const auto &d : invariants_) {
    if (d == 0) {
      parts[0].emplace_back(0);
      continue;
    }
    for (const auto &[p, e] : factorize(d))
      parts[p].push_back(pow_int(p, e));
  }
  std::map<BigInt, AbelianSpec> out;
  for (auto &[p, inv] : parts) {
    std::sort(inv.begin(), inv.end());
    out.emplace(p, AbelianSpec(std::move(inv)));
  }
  return out;
}

std::vector<BigInt> AbelianSpec::torsion_primes() const
{
  std::vector<BigInt> ps;
  for (const auto &[p, part] : primary_decompose())
    if (p != 0)
      ps.push_back(p);
  return ps;
}

AbelianSpec AbelianSpec::crt_recombine(const std::map<BigInt, AbelianSpec> &parts)
{
  // Largest prime powers across the primes multiply into the largest
  // invariant factor, and so on down; the result is a divisibility chain.
  std::size_t rank = 0;
  std::map<BigInt, std::vector<BigInt>> desc;
  for (const auto &[p, part] : parts) {
    if (p == 0) {
      rank = part.size();
      for (const auto &d : part.invariants())
        if (d != 0)
          throw std::invalid_argument("crt_recombine: part 0 must be free");
      continue;
    }
    desc[p] = part.invariants();
    std::sort(desc[p].rbegin(), desc[p].rend());
  }
  std::size_t layers = 0;
  for (const auto &[p, inv] : desc)
    layers = std::max(layers, inv.size());
  std::vector<BigInt> factors;
  for (std::size_t i = 0; i < layers; ++i) {
    BigInt f = 1;
    for (const auto &[p, inv] : desc)
      if (i < inv.size())
        f *= inv[i];
    factors.push_back(std::move(f));
  }
  std::reverse(factors.begin(), factors.end()); // ascending divisibility chain
  for (std::size_t i = 0; i < rank; ++i)
    factors.emplace_back(0);
  return AbelianSpec(std::move(factors));
}

bool AbelianSpec::isomorphic(const AbelianSpec &a, const AbelianSpec &b)
{
  if (a.rank() != b.rank())
    return false;
  auto pp = [](const AbelianSpec &s) {
    std::vector<BigInt> ms;
    for (const auto &[p, part] : s.primary_decompose()) {
      if (p == 0)
        continue;
      for (const auto &d : part.invariants())
        ms.push_back(d);
    }
    std::sort(ms.begin(), ms.end());
    return ms;
  };
  return pp(a) == pp(b);
}

std::string AbelianSpec::str() const
{
  std::string s;
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    if (i)
      s += ",";
    s += invariants_[i].get_str();
  }
  return s;
}

std::string AbelianElement::str() const
{
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i)
      s += ",";
    s += coords_[i].get_str();
  }
  return s + "]";
}

} // namespace wreath
