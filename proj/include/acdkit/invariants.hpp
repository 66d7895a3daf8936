#ifndef ACDKIT_INVARIANTS_HPP
#define ACDKIT_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "acdkit/char_table.hpp"
#include "acdkit/fields.hpp"

namespace acdkit {

/// Exact rational in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "num/den", always with an explicit denominator ("3/1").
std::string to_string(const Rational& r);
/// Parses "a/b" or "a".
Rational parse_rational(const std::string& text);

/// Degree multiset statistics of a set of rows.
struct Selection {
  std::vector<std::size_t> rows;
  std::map<std::uint64_t, std::uint64_t> counts;  // n_d over the selection
  BigInt degree_sum = 0;
  Rational average = 0;
};

Selection summarize(const CharTable& t, std::vector<std::size_t> rows);

/// Irr_{p'}(G) restricted to characters with values in f.
std::vector<std::size_t> irr_pprime(const CharTable& t, std::uint64_t p, const FieldSpec& f = FieldSpec::all());
/// Average degree over irr_pprime(t, p, f). Never empty: the trivial character qualifies.
Rational acd_pprime(const CharTable& t, std::uint64_t p, const FieldSpec& f = FieldSpec::all());
/// Average degree over every character with values in f.
Rational acd(const CharTable& t, const FieldSpec& f = FieldSpec::all());
/// n_d(G) restricted to characters with values in f.
std::uint64_t n_d(const CharTable& t, std::uint64_t d, const FieldSpec& f = FieldSpec::all());

/// Memoized selections per (prime, field) for one table; prime 0 means
/// "no degree restriction". The table must outlive the profile.
class DegreeProfile {
 public:
  explicit DegreeProfile(const CharTable& t) : table_(&t) {}

  const CharTable& table() const { return *table_; }
  const Selection& select(std::uint64_t p, const FieldSpec& f) const;

 private:
  const CharTable* table_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::uint64_t, FieldSpec>, Selection> cache_;
};

/// Irr(G|N): rows whose kernel does not contain N. Throws Error unless N is normal in G.
std::vector<std::size_t> relative_rows(const CharTable& t, const PermGroup& n);
std::uint64_t n_d_relative(const CharTable& t, const PermGroup& n, std::uint64_t d);
/// Average over Irr_{p'}(G|N); throws Error if that set is empty.
Rational acd_pprime_relative(const CharTable& t, const PermGroup& n, std::uint64_t p);

/// A linear character of a central subgroup Z as a value pattern:
/// lambda(z) = exp(2 pi i * l / root_order) for each listed (z, l).
struct CentralCharacter {
  std::uint64_t root_order = 1;
  std::vector<std::pair<Permutation, std::uint64_t>> values;
};

CentralCharacter trivial_central_character(const PermGroup& z);
/// lambda(generator^i) = exp(2 pi i * k * i / o), o the order of generator, which must generate z.
CentralCharacter cyclic_central_character(const PermGroup& z, const Permutation& generator, std::uint64_t k);

/// Rows chi with chi(z) = chi(1) * lambda(z) for all z in Z. Throws Error when Z
/// is not central, the pattern misses an element of Z, or lambda is not a homomorphism.
std::vector<std::size_t> rows_over_central(const CharTable& t, const PermGroup& z, const CentralCharacter& lambda);
/// acd_{p'}(G | lambda); throws Error when no p'-degree row lies over lambda.
Rational acd_pprime_over_central(const CharTable& t, const PermGroup& z, const CentralCharacter& lambda,
                                 std::uint64_t p);

}  // namespace acdkit

#endif  // ACDKIT_INVARIANTS_HPP
