#ifndef ACDKIT_FIELDS_HPP
#define ACDKIT_FIELDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "acdkit/char_table.hpp"

namespace acdkit {

/// Field that the character values must lie in: all of C, Q, R, or Q(zeta_p).
class FieldSpec {
 public:
  enum class Kind { All, Rational, Real, CyclotomicP };

  static FieldSpec all() { return FieldSpec(Kind::All, 0); }
  static FieldSpec rational() { return FieldSpec(Kind::Rational, 0); }
  static FieldSpec real() { return FieldSpec(Kind::Real, 0); }
  /// Q(zeta_p); throws std::invalid_argument unless p is prime.
  static FieldSpec cyclotomic(std::uint64_t p);
  /// "C", "Q", "R", or "Qp" (the latter needs the prime).
  static FieldSpec from_name(const std::string& name, std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t prime() const { return prime_; }
  /// "C", "Q", "R", or "Q<p>" such as "Q7".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  friend auto operator<=>(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t prime) : kind_(kind), prime_(prime) {}
  Kind kind_;
  std::uint64_t prime_;
};

/// Row of chi^sigma_k, where chi^sigma_k(g) = chi(g^k). Requires gcd(k, exponent) = 1.
/// Rows are matched by their mod-q values; throws InternalError if none matches.
std::size_t galois_image_row(const CharTable& t, std::size_t row, long long k);

bool in_field(const CharTable& t, std::size_t row, const FieldSpec& f);

/// Rows whose values lie in f, increasing.
std::vector<std::size_t> field_rows(const CharTable& t, const FieldSpec& f);

/// Smallest of Q, R (and Q<p> when given) containing the row's values, or "C".
std::string minimal_field_name(const CharTable& t, std::size_t row, std::uint64_t p = 0);

}  // namespace acdkit

#endif  // ACDKIT_FIELDS_HPP
