#include "wreath/perm.hpp"

#include <sstream>
#include <stdexcept>

namespace wreath {

Perm::Perm(std::vector<int> images) : img_(std::move(images))
{
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("Perm: not a permutation");
    seen[v] = 1;
  }
}

Perm Perm::operator*(const Perm &q) const
{
  if (degree() != q.degree())
    throw std::invalid_argument("Perm: degree mismatch");
  std::vector<int> r(img_.size());
  for (int i = 0; i < degree(); ++i)
    r[i] = img_[q.img_[i]];
  return Perm(std::move(r));
}

Perm Perm::inverse() const
{
  std::vector<int> r(img_.size());
  for (int i = 0; i < degree(); ++i)
    r[img_[i]] = i;
  return Perm(std::move(r));
}

Perm Perm::parse_cycles(const std::string &text, int degree)
{
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i)
    img[i] = i;

  std::vector<char> used(degree, 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("Perm: expected '(' in '" + text + "'");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t end = pos;
      while (end < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[end]))))
        ++end;
      if (end == pos)
        throw std::invalid_argument("Perm: expected point in '" + text + "'");
      int p = std::stoi(text.substr(pos, end - pos));
      if (p < 1 || p > degree)
        throw std::invalid_argument("Perm: point " + std::to_string(p) +
                                    " out of range 1.." + std::to_string(degree));
      cycle.push_back(p - 1);
      pos = end;
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size())
      throw std::invalid_argument("Perm: unterminated cycle in '" + text + "'");
    ++pos; // ')'
    saw_cycle = true;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (used[from])
        throw std::invalid_argument("Perm: point repeated in '" + text + "'");
      used[from] = 1;
      if (cycle.size() > 1)
        img[from] = to;
    }
    skip_ws();
  }
  if (!saw_cycle)
    throw std::invalid_argument("Perm: empty cycle expression '" + text + "'");

  return Perm(std::move(img));
}

std::string Perm::cycles() const
{
  std::vector<char> seen(img_.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i)
      continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first)
        out << ' ';
      out << (j + 1);
      first = false;
      j = img_[j];
    }
    out << ')';
  }
  if (!any)
    return "()";
  return out.str();
}

} // namespace wreath
