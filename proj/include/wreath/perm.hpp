#pragma once

// Permutations of {0, ..., n-1} with cycle-notation I/O (1-based on the
// text side, matching the group/action file format).

#include <string>
#include <vector>

namespace wreath {

class Perm {
public:
  Perm() = default;

  explicit Perm(int degree) : img_(degree)
  {
    for (int i = 0; i < degree; ++i)
      img_[i] = i;
  }

  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_.at(x); }
  const std::vector<int> &images() const { return img_; }

  bool is_identity() const
  {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i)
        return false;
    return true;
  }

  // (p * q)(x) = p(q(x)): composition matching a left action
  Perm operator*(const Perm &q) const;
  Perm inverse() const;

  int fixed_points() const
  {
    int c = 0;
    for (int i = 0; i < degree(); ++i)
      if (img_[i] == i)
        ++c;
    return c;
  }

  bool operator==(const Perm &o) const { return img_ == o.img_; }
  bool operator!=(const Perm &o) const { return !(*this == o); }
  bool operator<(const Perm &o) const { return img_ < o.img_; }

  // "(1 2)(3)" style, 1-based points
  static Perm parse_cycles(const std::string &text, int degree);
  std::string cycles() const;

private:
  std::vector<int> img_;
};

} // namespace wreath
