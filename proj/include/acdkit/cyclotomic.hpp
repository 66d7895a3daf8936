#ifndef ACDKIT_CYCLOTOMIC_HPP
#define ACDKIT_CYCLOTOMIC_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace acdkit {

/// A sum of e-th roots of unity, sum over l of m_l * z^l with z = exp(2 pi i / e)
/// and m_l >= 0, stored as its multiplicity vector (nonzero entries only).
///
/// This is the eigenvalue multiset of a representing matrix, so it is
/// canonical: two values coming from characters are equal as complex numbers
/// at the same group element iff their multiplicity vectors agree. No
/// reduction modulo the cyclotomic polynomial is ever applied.
class CyclotomicValue {
 public:
  using Term = std::pair<std::uint32_t, std::uint64_t>;  // (exponent l, multiplicity m_l)

  CyclotomicValue() = default;
  /// dense[l] = m_l; the root order is dense.size().
  explicit CyclotomicValue(const std::vector<std::uint64_t>& dense);
  CyclotomicValue(std::uint64_t root_order, std::vector<Term> terms);

  std::uint64_t root_order() const { return root_order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::uint64_t multiplicity(std::uint32_t l) const;
  /// Sum of multiplicities (the character degree).
  std::uint64_t total() const;
  std::vector<std::uint64_t> dense() const;
  /// Complex conjugate: l -> -l mod e.
  CyclotomicValue conjugate() const;
  /// True iff the value is the rational integer total(), i.e. all mass at l = 0.
  bool is_trivial_eigenvalue_set() const { return terms_.size() <= 1 && (terms_.empty() || terms_[0].first == 0); }

  /// "m*z^l" terms joined by " + "; the l = 0 term is printed as a bare integer.
  std::string to_string() const;

  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;
  friend auto operator<=>(const CyclotomicValue&, const CyclotomicValue&) = default;

 private:
  std::uint64_t root_order_ = 1;
  std::vector<Term> terms_;
};

/// Coefficients (low to high) of the e-th cyclotomic polynomial.
std::vector<long long> cyclotomic_polynomial(std::uint64_t e);

/// Reduces the integer combination sum c_l z^l (c.size() == e) modulo the
/// e-th cyclotomic polynomial, returning phi(e) coefficients in the power basis.
std::vector<long long> reduce_cyclotomic(std::vector<long long> c, std::uint64_t e);

}  // namespace acdkit

#endif  // ACDKIT_CYCLOTOMIC_HPP
