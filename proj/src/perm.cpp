#include "ftpi/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ftpi {

Perm::Perm(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= degree() || seen[x])
      throw std::invalid_argument("not a permutation: image vector is not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> r(img_.size());
  for (int i = 0; i < degree(); ++i) r[i] = rhs.img_[img_[i]];
  Perm p;
  p.img_ = std::move(r);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> r(img_.size());
  for (int i = 0; i < degree(); ++i) r[img_[i]] = i;
  Perm p;
  p.img_ = std::move(r);
  return p;
}

Perm Perm::conjugate_by(const Perm& g) const {
  // (g^-1 a g)(x) = g(a(g^-1(x)))
  std::vector<int> r(img_.size());
  for (int i = 0; i < degree(); ++i) r[g.img_[i]] = g.img_[img_[i]];
  Perm p;
  p.img_ = std::move(r);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Perm::first_moved() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return -1;
}

long long Perm::order() const {
  std::vector<char> seen(img_.size(), 0);
  long long ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1, ++len;
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t Perm::hash() const {
  // FNV-1a over the image vector
  std::size_t h = 1469598103934665603ull;
  for (int x : img_) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

Perm Perm::parse_cycles(int degree, const std::string& text) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("cycle parse error: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("cycle parse error: expected point in \"" + text + "\"");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v >= degree)
        throw std::invalid_argument("cycle parse error: point " + std::to_string(v) +
                                    " out of range for degree " + std::to_string(degree));
      cyc.push_back(v);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
    }
    if (i >= text.size())
      throw std::invalid_argument("cycle parse error: unterminated cycle in \"" + text + "\"");
    ++i;  // ')'
    for (size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
      if (img[from] != from)
        throw std::invalid_argument("cycle parse error: repeated point " + std::to_string(from));
      img[from] = to;
    }
    skip_ws();
  }
  return Perm(std::move(img));
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) { seen[i] = 1; continue; }
    any = true;
    os << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << j;
      first = false;
      seen[j] = 1;
      j = img_[j];
    } while (j != i);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace ftpi
