#include "acdkit/invariants.hpp"

#include "acdkit/error.hpp"
#include "acdkit/number_theory.hpp"

namespace acdkit {

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

Selection summarize(const CharTable& t, std::vector<std::size_t> rows) {
  Selection s;
  s.rows = std::move(rows);
  for (std::size_t r : s.rows) {
    ++s.counts[t.degree(r)];
    s.degree_sum += t.degree(r);
  }
  if (!s.rows.empty()) s.average = Rational(s.degree_sum, BigInt(s.rows.size()));
  return s;
}

std::vector<std::size_t> irr_pprime(const CharTable& t, std::uint64_t p, const FieldSpec& f) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  std::vector<std::size_t> rows;
  for (std::size_t r : field_rows(t, f)) {
    if (t.degree(r) % p != 0) rows.push_back(r);
  }
  return rows;
}

Rational acd_pprime(const CharTable& t, std::uint64_t p, const FieldSpec& f) {
  return summarize(t, irr_pprime(t, p, f)).average;
}

Rational acd(const CharTable& t, const FieldSpec& f) { return summarize(t, field_rows(t, f)).average; }

std::uint64_t n_d(const CharTable& t, std::uint64_t d, const FieldSpec& f) {
  std::uint64_t count = 0;
  for (std::size_t r : field_rows(t, f)) count += t.degree(r) == d ? 1 : 0;
  return count;
}

const Selection& DegreeProfile::select(std::uint64_t p, const FieldSpec& f) const {
  std::lock_guard lock(mu_);
  const auto key = std::make_pair(p, f);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Selection s = summarize(*table_, p == 0 ? field_rows(*table_, f) : irr_pprime(*table_, p, f));
  return cache_.emplace(key, std::move(s)).first->second;
}

namespace {

// chi(g_j) = degree * z^l exactly, with z = exp(2 pi i / exponent). The mod-q
// comparison rejects quickly; the lifted eigenvalue multiset decides.
bool value_is_scaled_root(const CharTable& t, std::size_t row, std::size_t cls, std::uint64_t l) {
  const auto& f = t.field();
  const std::uint64_t expected = mul_mod(t.degree(row) % f.q, pow_mod(f.w, l, f.q), f.q);
  if (t.value_mod_q(row, cls) != expected) return false;
  const auto& terms = t.lifted(row, cls).terms();
  return terms.size() == 1 && terms[0].first == l && terms[0].second == t.degree(row);
}

std::vector<std::uint32_t> classes_meeting(const PermGroup& g, const PermGroup& n) {
  const ElementStore& store = g.elements();
  const ClassData& cd = g.classes();
  std::vector<bool> seen(cd.count(), false);
  std::vector<std::uint32_t> out;
  for (const auto& x : n.elements().elements()) {
    const std::uint32_t c = cd.class_of[store.index_of(x)];
    if (!seen[c]) {
      seen[c] = true;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> relative_rows(const CharTable& t, const PermGroup& n) {
  if (!is_normal_subgroup(n, t.group())) throw Error("subgroup is not normal in the group");
  const std::vector<std::uint32_t> classes = classes_meeting(t.group(), n);
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::uint32_t c : classes) {
      if (!value_is_scaled_root(t, r, c, 0)) {
        rows.push_back(r);
        break;
      }
    }
  }
  return rows;
}

std::uint64_t n_d_relative(const CharTable& t, const PermGroup& n, std::uint64_t d) {
  std::uint64_t count = 0;
  for (std::size_t r : relative_rows(t, n)) count += t.degree(r) == d ? 1 : 0;
  return count;
}

Rational acd_pprime_relative(const CharTable& t, const PermGroup& n, std::uint64_t p) {
  std::vector<std::size_t> rows;
  for (std::size_t r : relative_rows(t, n)) {
    if (t.degree(r) % p != 0) rows.push_back(r);
  }
  if (rows.empty()) throw Error("Irr_p'(G|N) is empty");
  return summarize(t, std::move(rows)).average;
}

CentralCharacter trivial_central_character(const PermGroup& z) {
  CentralCharacter lambda;
  for (const auto& x : z.elements().elements()) lambda.values.emplace_back(x, 0);
  return lambda;
}

CentralCharacter cyclic_central_character(const PermGroup& z, const Permutation& generator, std::uint64_t k) {
  const std::uint64_t o = generator.order();
  if (z.order() != o || !z.contains(generator)) throw Error("element does not generate the central subgroup");
  CentralCharacter lambda;
  lambda.root_order = o;
  Permutation x = Permutation::identity(generator.degree());
  for (std::uint64_t i = 0; i < o; ++i) {
    lambda.values.emplace_back(x, (k * i) % o);
    x = x * generator;
  }
  return lambda;
}

std::vector<std::size_t> rows_over_central(const CharTable& t, const PermGroup& z, const CentralCharacter& lambda) {
  const PermGroup& g = t.group();
  if (!is_central_subgroup(z, g)) throw Error("subgroup is not central");
  const ElementStore& zs = z.elements();
  const std::uint64_t n = lambda.root_order;
  if (n == 0) throw Error("central character needs a positive root order");
  std::vector<std::optional<std::uint64_t>> pattern(zs.size());
  for (const auto& [x, l] : lambda.values) {
    const auto idx = zs.find(x);
    if (!idx) throw Error("central character lists an element outside the subgroup");
    if (pattern[*idx] && *pattern[*idx] != l % n) throw Error("central character lists an element twice");
    pattern[*idx] = l % n;
  }
  for (const auto& v : pattern) {
    if (!v) throw Error("central character does not cover every element of the subgroup");
  }
  for (std::size_t a = 0; a < zs.size(); ++a) {
    for (std::size_t b = 0; b < zs.size(); ++b) {
      if ((*pattern[a] + *pattern[b]) % n != *pattern[zs.index_of(zs[a] * zs[b])]) {
        throw Error("central character is not a homomorphism");
      }
    }
  }
  const std::uint64_t e = t.field().exponent;
  const ElementStore& store = g.elements();
  const ClassData& cd = g.classes();
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < t.size(); ++r) {
    bool over = true;
    for (std::size_t a = 0; a < zs.size() && over; ++a) {
      const std::uint64_t l = *pattern[a];
      if ((l * e) % n != 0) throw Error("central character value order does not divide the exponent");
      over = value_is_scaled_root(t, r, cd.class_of[store.index_of(zs[a])], (l * e) / n);
    }
    if (over) rows.push_back(r);
  }
  return rows;
}

Rational acd_pprime_over_central(const CharTable& t, const PermGroup& z, const CentralCharacter& lambda,
                                 std::uint64_t p) {
  std::vector<std::size_t> rows;
  for (std::size_t r : rows_over_central(t, z, lambda)) {
    if (t.degree(r) % p != 0) rows.push_back(r);
  }
  if (rows.empty()) throw Error("no p'-degree character lies over the central character");
  return summarize(t, std::move(rows)).average;
}

}  // namespace acdkit
