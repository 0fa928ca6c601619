#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ftpi {

// A permutation of {0..n-1}, stored as its image vector. Products compose
// left-to-right: (a*b)(x) = b(a(x)), matching the right-action convention
// used throughout (x^(gh) = (x^g)^h).
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);                  // identity
  explicit Perm(std::vector<int> images);     // validates bijection

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  // g^-1 * (*this) * g
  Perm conjugate_by(const Perm& g) const;

  bool is_identity() const;
  int first_moved() const;  // -1 if identity
  long long order() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  std::size_t hash() const;

  // disjoint-cycle notation over 0-based points, e.g. "(0 1 2)(3 4)";
  // "()" denotes the identity.
  static Perm parse_cycles(int degree, const std::string& text);
  std::string cycle_string() const;

 private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace ftpi
