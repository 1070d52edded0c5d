#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace conjrank {

using Point = std::uint16_t;

// A permutation of {0,...,n-1}, stored as its image array.
// Composition is (a*b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(int degree);

  // Parses disjoint-cycle notation, e.g. "(0 1)(2 3)".  Fixed points are
  // omitted; "()" or an empty string is the identity.
  static Permutation from_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  Point apply(Point x) const { return images_[x]; }
  Point operator()(Point x) const { return images_[x]; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  long order() const;

  std::string cycle_string() const;

  const std::vector<Point>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// g x g^-1
inline Permutation conjugate(const Permutation& x, const Permutation& g) {
  return g * x * g.inverse();
}

}  // namespace conjrank
