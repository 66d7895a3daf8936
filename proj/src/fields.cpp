#include "acdkit/fields.hpp"

#include <numeric>
#include <stdexcept>

#include "acdkit/error.hpp"
#include "acdkit/number_theory.hpp"

namespace acdkit {

namespace {

std::uint64_t reduce_exponent(long long k, std::uint64_t e) {
  const auto m = static_cast<long long>(e);
  long long r = k % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

bool fixed_by(const CharTable& t, std::size_t row, std::uint64_t k) {
  const ClassData& cd = t.classes();
  for (std::size_t j = 0; j < cd.count(); ++j) {
    if (t.value_mod_q(row, cd.power(j, static_cast<long long>(k))) != t.value_mod_q(row, j)) return false;
  }
  return true;
}

// Every unit k mod e with k = 1 (mod modulus) fixes the row.
bool fixed_by_units(const CharTable& t, std::size_t row, std::uint64_t modulus) {
  const std::uint64_t e = t.field().exponent;
  for (std::uint64_t k = 1; k <= e; ++k) {
    if (std::gcd(k, e) != 1 || (k - 1) % modulus != 0) continue;
    if (!fixed_by(t, row, k)) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::cyclotomic(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("Q_p needs a prime, got " + std::to_string(p));
  return FieldSpec(Kind::CyclotomicP, p);
}

FieldSpec FieldSpec::from_name(const std::string& name, std::uint64_t p) {
  if (name == "C") return all();
  if (name == "Q") return rational();
  if (name == "R") return real();
  if (name == "Qp") return cyclotomic(p);
  throw std::invalid_argument("unknown field '" + name + "' (expected Q, Qp, R or C)");
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case Kind::All:
      return "C";
    case Kind::Rational:
      return "Q";
    case Kind::Real:
      return "R";
    case Kind::CyclotomicP:
      return "Q" + std::to_string(prime_);
  }
  return "?";
}

std::size_t galois_image_row(const CharTable& t, std::size_t row, long long k) {
  const ClassData& cd = t.classes();
  const std::uint64_t e = t.field().exponent;
  const std::uint64_t kk = reduce_exponent(k, e);
  if (std::gcd(kk, e) != 1 && e != 1) throw std::invalid_argument("Galois exponent must be coprime to the exponent");
  ModVector image(cd.count());
  for (std::size_t j = 0; j < cd.count(); ++j) image[j] = t.value_mod_q(row, cd.power(j, static_cast<long long>(kk)));
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t.values_mod_q()[r] == image) return r;
  }
  throw InternalError("Galois image of row " + std::to_string(row) + " is not a row of the table");
}

bool in_field(const CharTable& t, std::size_t row, const FieldSpec& f) {
  const std::uint64_t e = t.field().exponent;
  switch (f.kind()) {
    case FieldSpec::Kind::All:
      return true;
    case FieldSpec::Kind::Rational:
      return fixed_by_units(t, row, 1);
    case FieldSpec::Kind::Real:
      return fixed_by(t, row, e - 1 + (e == 1 ? 1 : 0));
    case FieldSpec::Kind::CyclotomicP:
      // Q(zeta_p) is fixed by {k = 1 mod p}; when p does not divide e it meets Q(zeta_e) in Q.
      return fixed_by_units(t, row, e % f.prime() == 0 ? f.prime() : 1);
  }
  return false;
}

std::vector<std::size_t> field_rows(const CharTable& t, const FieldSpec& f) {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (in_field(t, r, f)) rows.push_back(r);
  }
  return rows;
}

std::string minimal_field_name(const CharTable& t, std::size_t row, std::uint64_t p) {
  if (in_field(t, row, FieldSpec::rational())) return "Q";
  std::string out;
  if (in_field(t, row, FieldSpec::real())) out = "R";
  if (p != 0 && in_field(t, row, FieldSpec::cyclotomic(p))) out += (out.empty() ? "" : ",") + FieldSpec::cyclotomic(p).name();
  return out.empty() ? "C" : out;
}

}  // namespace acdkit
