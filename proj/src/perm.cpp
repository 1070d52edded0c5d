#include "conjrank/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "conjrank/errors.hpp"

namespace conjrank {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw Error("image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, const std::string& text) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point index in cycle notation: " + text);
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v >= degree) throw ParseError("point out of range in cycle notation: " + text);
      cycle.push_back(static_cast<Point>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("unterminated cycle: " + text);
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point from = cycle[k];
      Point to = cycle[(k + 1) % cycle.size()];
      if (img[from] != from) throw ParseError("point repeated across cycles: " + text);
      img[from] = to;
    }
    skip_ws();
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw DegreeMismatch("composing permutations of different degree");
  std::vector<Point> img(images_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = images_[other.images_[x]];
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Point> img(images_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[images_[x]] = static_cast<Point>(x);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

long Permutation::order() const {
  // lcm of cycle lengths
  long result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    long len = 0;
    Point x = static_cast<Point>(s);
    do {
      seen[x] = true;
      x = images_[x];
      ++len;
    } while (x != s);
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == s) {
      seen[s] = true;
      continue;
    }
    out << '(';
    Point x = static_cast<Point>(s);
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      seen[x] = true;
      x = images_[x];
      first = false;
    } while (x != s);
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace conjrank
