#include "wreath/bs.hpp"

#include <sstream>

namespace wreath {

namespace {

// h^{p/q}: q must be a power of k.  Returns (p, e) with q = k^e.
LocalizedInt parse_h_exponent(const std::string &body, long k)
{
  auto slash = body.find('/');
  if (slash == std::string::npos)
    return LocalizedInt(k, BigInt(body));
  BigInt p(body.substr(0, slash));
  BigInt q(body.substr(slash + 1));
  if (q <= 0)
    throw std::invalid_argument("word: denominator must be positive in h^{p/q}");
  long e = 0;
  BigInt rest = q, kk(k);
  while (rest > 1) {
    if (!mpz_divisible_p(rest.get_mpz_t(), kk.get_mpz_t()))
      throw std::invalid_argument("word: denominator " + q.get_str() +
                                  " is not a power of the base " + std::to_string(k));
    rest /= kk;
    ++e;
  }
  return LocalizedInt(k, std::move(p), e);
}

} // namespace

BSElement parse_bs_word(const std::string &word, long k)
{
  BSElement acc = BSElement::identity(k);
  std::istringstream in(word);
  std::string tok;
  while (in >> tok) {
    BSElement g = BSElement::identity(k);
    try {
      if (tok == "h")
        g = BSElement::h0(k);
      else if (tok == "h^-1")
        g = BSElement::h0(k).inverse();
      else if (tok == "t")
        g = BSElement::t(k);
      else if (tok == "t^-1")
        g = BSElement::t(k).inverse();
      else if (tok.rfind("h^{", 0) == 0 && tok.back() == '}')
        g = BSElement::h_power(parse_h_exponent(tok.substr(3, tok.size() - 4), k));
      else if (tok.rfind("h^", 0) == 0)
        g = BSElement::h_power(parse_h_exponent(tok.substr(2), k));
      else if (tok.rfind("t^", 0) == 0)
        g = BSElement::t(k).pow(std::stoll(tok.substr(2)));
      else
        throw std::invalid_argument("unknown token");
    } catch (const std::invalid_argument &) {
      throw std::invalid_argument("word: cannot parse token '" + tok + "'");
    }
    acc = acc * g;
  }
  return acc;
}

} // namespace wreath
