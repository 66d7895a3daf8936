#include "acdkit/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "acdkit/error.hpp"

namespace acdkit {

CyclotomicValue::CyclotomicValue(const std::vector<std::uint64_t>& dense) : root_order_(dense.size()) {
  if (dense.empty()) throw std::invalid_argument("root order must be positive");
  for (std::size_t l = 0; l < dense.size(); ++l) {
    if (dense[l] != 0) terms_.emplace_back(static_cast<std::uint32_t>(l), dense[l]);
  }
}

CyclotomicValue::CyclotomicValue(std::uint64_t root_order, std::vector<Term> terms)
    : root_order_(root_order), terms_(std::move(terms)) {
  if (root_order_ == 0) throw std::invalid_argument("root order must be positive");
  std::sort(terms_.begin(), terms_.end());
  std::vector<Term> merged;
  for (const auto& [l, m] : terms_) {
    if (l >= root_order_) throw std::invalid_argument("exponent out of range");
    if (m == 0) continue;
    if (!merged.empty() && merged.back().first == l) {
      merged.back().second += m;
    } else {
      merged.emplace_back(l, m);
    }
  }
  terms_ = std::move(merged);
}

std::uint64_t CyclotomicValue::multiplicity(std::uint32_t l) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{l, 0});
  return it != terms_.end() && it->first == l ? it->second : 0;
}

std::uint64_t CyclotomicValue::total() const {
  std::uint64_t t = 0;
  for (const auto& term : terms_) t += term.second;
  return t;
}

std::vector<std::uint64_t> CyclotomicValue::dense() const {
  std::vector<std::uint64_t> out(root_order_, 0);
  for (const auto& [l, m] : terms_) out[l] = m;
  return out;
}

CyclotomicValue CyclotomicValue::conjugate() const {
  std::vector<Term> terms;
  for (const auto& [l, m] : terms_) {
    terms.emplace_back(static_cast<std::uint32_t>((root_order_ - l) % root_order_), m);
  }
  return CyclotomicValue(root_order_, std::move(terms));
}

std::string CyclotomicValue::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [l, m] : terms_) {
    if (!out.empty()) out += " + ";
    if (l == 0) {
      out += std::to_string(m);
    } else {
      if (m != 1) out += std::to_string(m) + "*";
      out += "z^" + std::to_string(l);
    }
  }
  return out;
}

std::vector<long long> cyclotomic_polynomial(std::uint64_t e) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<long long>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  // x^e - 1 divided by every Phi_d with d | e, d < e. All divisors are monic.
  std::vector<long long> poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (std::uint64_t d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    const std::vector<long long> divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<long long> quotient(poly.size() - dd, 0);
    for (std::size_t k = poly.size() - 1; k + 1 > dd; --k) {
      const long long c = poly[k];
      quotient[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dd; ++i) poly[k - dd + i] -= c * divisor[i];
      if (k == dd) break;
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(mu);
  cache.emplace(e, poly);
  return poly;
}

std::vector<long long> reduce_cyclotomic(std::vector<long long> c, std::uint64_t e) {
  const std::vector<long long> phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = c.size(); k-- > deg;) {
    const long long lead = c[k];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) {
      long long prod = 0;
      if (__builtin_mul_overflow(lead, phi[i], &prod) || __builtin_sub_overflow(c[k - deg + i], prod, &c[k - deg + i])) {
        throw InternalError("overflow reducing cyclotomic integer");
      }
    }
  }
  c.resize(std::min(c.size(), deg));
  c.resize(deg, 0);
  return c;
}

}  // namespace acdkit
