#include "acdkit/char_table.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"

#include "acdkit/error.hpp"
#include "acdkit/number_theory.hpp"

namespace acdkit {

namespace {

bool has_exact_order(std::uint64_t x, std::uint64_t e, std::uint64_t q) {
  if (pow_mod(x, e, q) != 1) return false;
  for (std::uint64_t r : prime_divisors(e)) {
    if (pow_mod(x, e / r, q) == 1) return false;
  }
  return true;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return a >= b ? a - b : a + q - b; }

struct Subspace {
  ModMatrix basis;  // rows, reduced row echelon form
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(ModMatrix rows, std::uint64_t q) {
  Subspace s;
  s.pivots = rref(rows, q);
  s.basis = std::move(rows);
  return s;
}

// Eigenspaces of m restricted to the m-invariant subspace w.
std::vector<Subspace> split(const Subspace& w, const ModMatrix& m, std::uint64_t q) {
  const std::size_t dim = w.basis.size();
  ModMatrix restricted(dim, ModVector(dim, 0));
  for (std::size_t s = 0; s < dim; ++s) {
    const ModVector image = apply(m, w.basis[s], q);
    for (std::size_t t = 0; t < dim; ++t) restricted[t][s] = image[w.pivots[t]];
  }
  const std::vector<std::uint64_t> eigenvalues = roots(characteristic_polynomial(restricted, q), q);
  if (eigenvalues.size() <= 1) return {w};

  std::vector<Subspace> parts;
  std::size_t total = 0;
  for (std::uint64_t lambda : eigenvalues) {
    ModMatrix shifted = restricted;
    for (std::size_t i = 0; i < dim; ++i) shifted[i][i] = sub_mod(shifted[i][i], lambda, q);
    ModMatrix vectors;
    for (const ModVector& c : nullspace(shifted, dim, q)) {
      ModVector v(w.basis.front().size(), 0);
      for (std::size_t s = 0; s < dim; ++s) {
        if (c[s] == 0) continue;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = (v[k] + mul_mod(c[s], w.basis[s][k], q)) % q;
      }
      vectors.push_back(std::move(v));
    }
    total += vectors.size();
    parts.push_back(make_subspace(std::move(vectors), q));
  }
  if (total != dim) throw InternalError("class matrix is not diagonalizable over F_q");
  return parts;
}

ModMatrix reduce_matrix(const std::vector<std::vector<std::uint64_t>>& m, std::uint64_t q) {
  ModMatrix out(m.size(), ModVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[i][j] % q;
  }
  return out;
}

CyclotomicValue lift_from_row(const ClassData& cd, const WorkingField& f, const ModVector& row, std::uint64_t degree,
                              std::size_t cls) {
  const std::uint64_t q = f.q;
  const std::uint64_t m = cd.element_orders[cls];
  const std::uint64_t step = f.exponent / m;
  const std::uint64_t z = pow_mod(f.w, step, q);
  std::vector<std::uint64_t> zpow(m);
  zpow[0] = 1;
  for (std::uint64_t k = 1; k < m; ++k) zpow[k] = mul_mod(zpow[k - 1], z, q);
  const std::uint64_t inv_m = inv_mod(m % q, q);

  std::vector<CyclotomicValue::Term> terms;
  std::uint64_t total = 0;
  for (std::uint64_t l = 0; l < m; ++l) {
    std::uint64_t acc = 0;
    for (std::uint64_t k = 0; k < m; ++k) {
      const std::uint64_t value = row[cd.power_map[cls][k]];
      acc = (acc + mul_mod(value, zpow[(m - (k * l) % m) % m], q)) % q;
    }
    const std::uint64_t mult = mul_mod(acc, inv_m, q);
    if (mult > degree) {
      throw InternalError("lifted multiplicity " + std::to_string(mult) + " outside [0, " + std::to_string(degree) +
                          "] at class " + std::to_string(cls));
    }
    if (mult != 0) terms.emplace_back(static_cast<std::uint32_t>(l * step), mult);
    total += mult;
  }
  if (total != degree) throw InternalError("lifted multiplicities do not sum to the degree");
  return CyclotomicValue(f.exponent, std::move(terms));
}

}  // namespace

WorkingField select_prime(std::uint64_t exponent, std::uint64_t order, std::uint64_t above) {
  if (exponent == 0 || order == 0) throw std::invalid_argument("exponent and order must be positive");
  const std::uint64_t floor_bound = std::max(above, 2 * isqrt(order));
  // Smallest q = 1 (mod exponent) with q > floor_bound.
  std::uint64_t q = floor_bound + 1;
  q += (exponent + 1 - q % exponent) % exponent;
  while (!is_prime(q)) q += exponent;
  WorkingField f{q, 0, exponent};
  for (std::uint64_t g = 2; g < q + 2; ++g) {
    const std::uint64_t x = pow_mod(g, (q - 1) / exponent, q);
    if (has_exact_order(x, exponent, q)) {
      f.w = x;
      return f;
    }
  }
  throw InternalError("no element of order " + std::to_string(exponent) + " mod " + std::to_string(q));
}

CharTable::CharTable(PermGroup group, WorkingField field, std::vector<std::uint64_t> degrees, ModMatrix values_mod_q,
                     std::vector<std::vector<CyclotomicValue>> lifted)
    : group_(std::move(group)),
      order_(group_.small_order()),
      field_(field),
      degrees_(std::move(degrees)),
      values_(std::move(values_mod_q)),
      lifted_(std::move(lifted)) {}

std::vector<std::vector<std::uint64_t>> class_matrix(const PermGroup& g, std::size_t i) {
  const ElementStore& store = g.elements();
  const ClassData& cd = g.classes();
  const std::size_t r = cd.count();
  std::vector<std::vector<std::uint64_t>> m(r, std::vector<std::uint64_t>(r, 0));
  for (std::size_t x = 0; x < store.size(); ++x) {
    if (cd.class_of[x] != i) continue;
    const Permutation inv = store[x].inverse();
    for (std::size_t k = 0; k < r; ++k) ++m[cd.class_of[store.index_of(inv * cd.reps[k])]][k];
  }
  return m;
}

CharTable compute_table(const PermGroup& g) {
  const ClassData& cd = g.classes();
  return compute_table(g, select_prime(cd.exponent, g.small_order()));
}

CharTable compute_table(const PermGroup& g, const WorkingField& f) {
  const ClassData& cd = g.classes();
  const std::uint64_t order = g.small_order();
  const std::uint64_t q = f.q;
  const std::size_t r = cd.count();
  if (f.exponent != cd.exponent || (q - 1) % f.exponent != 0 || order % q == 0 || q <= 2 * isqrt(order)) {
    throw Error("working field q=" + std::to_string(q) + " is not admissible for this group");
  }

  ModMatrix identity(r, ModVector(r, 0));
  for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
  std::vector<Subspace> spaces{make_subspace(std::move(identity), q)};
  auto fully_split = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; });
  };
  auto refine = [&](const ModMatrix& m) {
    std::vector<Subspace> next;
    for (const Subspace& w : spaces) {
      if (w.basis.size() == 1) {
        next.push_back(w);
        continue;
      }
      for (auto& part : split(w, m, q)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  };

  std::vector<std::size_t> order_by_size(r);
  std::iota(order_by_size.begin(), order_by_size.end(), std::size_t{0});
  std::stable_sort(order_by_size.begin(), order_by_size.end(),
                   [&](std::size_t a, std::size_t b) { return cd.sizes[a] < cd.sizes[b]; });
  std::vector<ModMatrix> used;
  for (std::size_t i : order_by_size) {
    if (fully_split()) break;
    if (i == 0) continue;
    used.push_back(reduce_matrix(class_matrix(g, i), q));
    refine(used.back());
  }
  if (!fully_split()) {
    std::mt19937_64 rng(order * 1000003ULL + q);
    std::uniform_int_distribution<std::uint64_t> coef(0, q - 1);
    for (int attempt = 0; attempt < 64 && !fully_split(); ++attempt) {
      ModMatrix combo(r, ModVector(r, 0));
      for (const ModMatrix& m : used) {
        const std::uint64_t c = coef(rng);
        for (std::size_t a = 0; a < r; ++a) {
          for (std::size_t b = 0; b < r; ++b) combo[a][b] = (combo[a][b] + mul_mod(c, m[a][b], q)) % q;
        }
      }
      refine(combo);
    }
  }
  if (spaces.size() != r || !fully_split()) {
    throw InternalError("eigenspace splitting did not separate the characters");
  }

  const std::uint64_t root_bound = isqrt(order);
  struct Row {
    std::uint64_t degree;
    ModVector values;
    std::vector<CyclotomicValue> lifted;
  };
  std::vector<Row> rows;
  for (const Subspace& s : spaces) {
    ModVector v = s.basis.front();
    if (v[0] == 0) throw InternalError("eigenvector vanishes on the identity class");
    const std::uint64_t inv0 = inv_mod(v[0], q);
    for (auto& x : v) x = mul_mod(x, inv0, q);
    // sum_j w_j w_j' / |C_j| = |G| / degree^2
    std::uint64_t norm = 0;
    for (std::size_t j = 0; j < r; ++j) {
      const std::uint64_t term = mul_mod(mul_mod(v[j], v[cd.inverse_class(j)], q), inv_mod(cd.sizes[j] % q, q), q);
      norm = (norm + term) % q;
    }
    if (norm == 0) throw InternalError("eigenvector has zero norm");
    const std::uint64_t d2 = mul_mod(order % q, inv_mod(norm, q), q);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= root_bound; ++d) {
      if (mul_mod(d, d, q) == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw InternalError("no degree in [1, sqrt|G|] squares to the eigenvector norm");
    Row row{degree, ModVector(r), {}};
    for (std::size_t j = 0; j < r; ++j) {
      row.values[j] = mul_mod(mul_mod(degree % q, v[j], q), inv_mod(cd.sizes[j] % q, q), q);
    }
    for (std::size_t j = 0; j < r; ++j) row.lifted.push_back(lift_from_row(cd, f, row.values, degree, j));
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.degree, a.lifted) < std::tie(b.degree, b.lifted);
  });

  std::uint64_t square_sum = 0;
  std::vector<std::uint64_t> degrees;
  ModMatrix values;
  std::vector<std::vector<CyclotomicValue>> lifted;
  for (auto& row : rows) {
    if (order % row.degree != 0) throw InternalError("character degree does not divide the group order");
    square_sum += row.degree * row.degree;
    degrees.push_back(row.degree);
    values.push_back(std::move(row.values));
    lifted.push_back(std::move(row.lifted));
  }
  if (square_sum != order) throw InternalError("sum of squared degrees differs from the group order");
  return CharTable(g, f, std::move(degrees), std::move(values), std::move(lifted));
}

CyclotomicValue lift_value(const CharTable& t, std::size_t row, std::size_t cls) {
  return lift_from_row(t.classes(), t.field(), t.values_mod_q()[row], t.degree(row), cls);
}

OrthogonalityReport verify_orthogonality(const CharTable& t) {
  const ClassData& cd = t.classes();
  const std::uint64_t q = t.field().q;
  const std::uint64_t e = t.field().exponent;
  const std::uint64_t order = t.group_order();
  const std::size_t r = cd.count();
  auto fail = [](std::string what) { return OrthogonalityReport{false, std::move(what)}; };

  if (t.size() != r) return fail("row count " + std::to_string(t.size()) + " != class count " + std::to_string(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < r; ++j) {
        const std::uint64_t term = mul_mod(t.value_mod_q(a, j), t.value_mod_q(b, cd.inverse_class(j)), q);
        acc = (acc + mul_mod(term, cd.sizes[j] % q, q)) % q;
      }
      if (acc != (a == b ? order % q : 0)) {
        return fail("row orthogonality mod q fails for rows " + std::to_string(a) + ", " + std::to_string(b));
      }
    }
  }
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = j; k < r; ++k) {
      std::uint64_t acc = 0;
      for (std::size_t a = 0; a < r; ++a) {
        acc = (acc + mul_mod(t.value_mod_q(a, j), t.value_mod_q(a, cd.inverse_class(k)), q)) % q;
      }
      if (acc != (j == k ? cd.centralizer_order(j, order) % q : 0)) {
        return fail("column orthogonality mod q fails for classes " + std::to_string(j) + ", " + std::to_string(k));
      }
    }
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      std::vector<long long> acc(e, 0);
      for (std::size_t j = 0; j < r; ++j) {
        const auto weight = static_cast<long long>(cd.sizes[j]);
        for (const auto& [la, ma] : t.lifted(a, j).terms()) {
          for (const auto& [lb, mb] : t.lifted(b, j).terms()) {
            acc[(la + e - lb) % e] += weight * static_cast<long long>(ma * mb);
          }
        }
      }
      const std::vector<long long> reduced = reduce_cyclotomic(std::move(acc), e);
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        const long long want = (i == 0 && a == b) ? static_cast<long long>(order) : 0;
        if (reduced[i] != want) {
          return fail("exact row orthogonality fails for rows " + std::to_string(a) + ", " + std::to_string(b));
        }
      }
    }
  }
  return {};
}

std::string table_to_json(const CharTable& t) {
  const ClassData& cd = t.classes();
  nlohmann::ordered_json doc;
  doc["order"] = t.group_order();
  doc["exponent"] = t.field().exponent;
  doc["q"] = t.field().q;
  doc["w"] = t.field().w;
  doc["classes"] = nlohmann::json::array();
  for (std::size_t j = 0; j < cd.count(); ++j) {
    doc["classes"].push_back(nlohmann::ordered_json{
        {"rep", to_cycle_string(cd.reps[j])}, {"size", cd.sizes[j]}, {"element_order", cd.element_orders[j]}});
  }
  doc["degrees"] = t.degrees();
  doc["characters"] = nlohmann::json::array();
  for (std::size_t a = 0; a < t.size(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < cd.count(); ++j) row.push_back(t.lifted(a, j).to_string());
    doc["characters"].push_back(std::move(row));
  }
  doc["values_mod_q"] = t.values_mod_q();
  return doc.dump(2);
}

std::string table_to_text(const CharTable& t) {
  const ClassData& cd = t.classes();
  std::ostringstream out;
  out << "order " << t.group_order() << ", " << cd.count() << " classes, z = exp(2*pi*i/" << t.field().exponent
      << "), q = " << t.field().q << "\n";
  for (std::size_t j = 0; j < cd.count(); ++j) {
    out << "  class " << j << ": order " << cd.element_orders[j] << ", size " << cd.sizes[j] << ", rep "
        << to_cycle_string(cd.reps[j]) << "\n";
  }
  for (std::size_t a = 0; a < t.size(); ++a) {
    out << "X." << a << " (degree " << t.degree(a) << "):";
    for (std::size_t j = 0; j < cd.count(); ++j) out << (j == 0 ? " " : " | ") << t.lifted(a, j).to_string();
    out << "\n";
  }
  return out.str();
}

}  // namespace acdkit
