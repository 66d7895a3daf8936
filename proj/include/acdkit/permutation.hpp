#ifndef ACDKIT_PERMUTATION_HPP
#define ACDKIT_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acdkit {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as its image array.
///
/// Products act on the right: (a * b)(i) = b(a(i)), so a is applied first.
/// Conjugation follows the same convention, x^g = g^-1 * x * g.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  Permutation conjugate_by(const Permutation& g) const;
  /// Order of the cyclic subgroup generated by this permutation.
  std::uint64_t order() const;
  /// Returns a copy acting on degree points, fixing the extra ones.
  Permutation extended(std::size_t degree) const;
  /// Returns a copy acting on [offset, offset + degree()) inside new_degree points.
  Permutation shifted(std::size_t offset, std::size_t new_degree) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Formats in disjoint cycle notation with 0-based points, "()" for the identity.
std::string to_cycle_string(const Permutation& p);

/// Parses cycle notation such as "(0 1 2)(3 4)" or "(0,1,2)". Whitespace is
/// ignored; points must be < degree.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Largest point mentioned in cycle notation, or -1 for "()".
long long max_point_in_cycles(std::string_view text);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace acdkit

#endif  // ACDKIT_PERMUTATION_HPP
