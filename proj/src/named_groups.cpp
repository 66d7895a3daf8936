#include "acdkit/named_groups.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "acdkit/error.hpp"
#include "acdkit/number_theory.hpp"

namespace acdkit {

namespace {

// Arithmetic in F_q for q prime or q = 9 = F_3[i]/(i^2+1). An element of F_9
// is encoded as a + 3b for a + b*i.
class SmallField {
 public:
  explicit SmallField(std::size_t q) : q_(q) {
    if (q == 9) {
      p_ = 3;
    } else if (q >= 2 && is_prime(q)) {
      p_ = q;
    } else {
      throw Error("unsupported field size " + std::to_string(q) + " (need a prime or 9)");
    }
  }

  std::size_t size() const { return q_; }
  std::size_t add(std::size_t x, std::size_t y) const {
    if (q_ == p_) return (x + y) % p_;
    return (x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3);
  }
  std::size_t mul(std::size_t x, std::size_t y) const {
    if (q_ == p_) return (x * y) % p_;
    const std::size_t a = x % 3, b = x / 3, c = y % 3, d = y / 3;
    // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
    return (a * c + 2 * b * d) % 3 + 3 * ((a * d + b * c) % 3);
  }
  std::size_t neg(std::size_t x) const {
    if (q_ == p_) return (p_ - x) % p_;
    return (3 - x % 3) % 3 + 3 * ((3 - x / 3) % 3);
  }
  std::size_t inv(std::size_t x) const {
    for (std::size_t y = 1; y < q_; ++y) {
      if (mul(x, y) == 1) return y;
    }
    throw InternalError("zero has no inverse");
  }
  // Additive generators: {1} for prime fields, {1, i} for F_9.
  std::vector<std::size_t> additive_basis() const {
    if (q_ == p_) return {1};
    return {1, 3};
  }

 private:
  std::size_t q_;
  std::size_t p_;
};

using Matrix2 = std::array<std::size_t, 4>;  // row-major a b / c d

// Nonzero vector (x, y) <-> point x + q*y - 1.
Permutation matrix_on_vectors(const SmallField& f, const Matrix2& m) {
  const std::size_t q = f.size();
  std::vector<Point> images(q * q - 1);
  for (std::size_t y = 0; y < q; ++y) {
    for (std::size_t x = 0; x < q; ++x) {
      if (x == 0 && y == 0) continue;
      const std::size_t nx = f.add(f.mul(m[0], x), f.mul(m[1], y));
      const std::size_t ny = f.add(f.mul(m[2], x), f.mul(m[3], y));
      images[x + q * y - 1] = static_cast<Point>(nx + q * ny - 1);
    }
  }
  return Permutation(std::move(images));
}

// Projective point [x : 1] <-> x, [1 : 0] <-> q.
Permutation matrix_on_lines(const SmallField& f, const Matrix2& m) {
  const std::size_t q = f.size();
  auto point_of = [&](std::size_t x, std::size_t y) -> Point {
    if (y == 0) return static_cast<Point>(q);
    return static_cast<Point>(f.mul(x, f.inv(y)));
  };
  std::vector<Point> images(q + 1);
  for (std::size_t pt = 0; pt <= q; ++pt) {
    const std::size_t x = pt == q ? 1 : pt;
    const std::size_t y = pt == q ? 0 : 1;
    images[pt] = point_of(f.add(f.mul(m[0], x), f.mul(m[1], y)), f.add(f.mul(m[2], x), f.mul(m[3], y)));
  }
  return Permutation(std::move(images));
}

// Upper and lower unitriangular matrices over an additive basis generate SL(2,q).
std::vector<Matrix2> sl2_generators(const SmallField& f) {
  std::vector<Matrix2> gens;
  for (std::size_t t : f.additive_basis()) {
    gens.push_back({1, t, 0, 1});
    gens.push_back({1, 0, t, 1});
  }
  return gens;
}

}  // namespace

PermGroup cyclic(std::size_t n) {
  if (n == 0) throw Error("C(n) needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation(std::move(images))});
}

PermGroup dihedral(std::size_t n) {
  if (n == 0) throw Error("D(n) needs n >= 1");
  if (n == 1) return cyclic(2);
  if (n == 2) {
    return PermGroup(4, {parse_cycles("(0 1)(2 3)", 4), parse_cycles("(0 2)(1 3)", 4)});
  }
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

PermGroup symmetric(std::size_t n) {
  if (n == 0) throw Error("S(n) needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
  std::vector<Permutation> gens{parse_cycles("(0 1)", n)};
  if (n > 2) gens.emplace_back(std::move(cycle));
  return PermGroup(n, std::move(gens));
}

PermGroup alternating(std::size_t n) {
  if (n == 0) throw Error("A(n) needs n >= 1");
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    std::vector<Point> images(n);
    for (std::size_t k = 0; k < n; ++k) images[k] = static_cast<Point>(k);
    images[i] = static_cast<Point>(i + 1);
    images[i + 1] = static_cast<Point>(i + 2);
    images[i + 2] = static_cast<Point>(i);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup special_linear(std::size_t q) {
  const SmallField f(q);
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generators(f)) gens.push_back(matrix_on_vectors(f, m));
  return PermGroup(q * q - 1, std::move(gens));
}

Permutation special_linear_negation(std::size_t q) {
  const SmallField f(q);
  const std::size_t minus_one = f.neg(1);
  return matrix_on_vectors(f, {minus_one, 0, 0, minus_one});
}

PermGroup projective_special_linear(std::size_t q) {
  const SmallField f(q);
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generators(f)) gens.push_back(matrix_on_lines(f, m));
  return PermGroup(q + 1, std::move(gens));
}

PermGroup affine(std::size_t p, std::size_t d) {
  if (p < 2 || !is_prime(p)) throw Error("Aff(p,d) needs p prime, got " + std::to_string(p));
  if (d == 0 || (p - 1) % d != 0) {
    throw Error("Aff(p,d) needs d | p-1, got p=" + std::to_string(p) + " d=" + std::to_string(d));
  }
  std::vector<Point> translation(p);
  for (std::size_t i = 0; i < p; ++i) translation[i] = static_cast<Point>((i + 1) % p);
  std::vector<Permutation> gens{Permutation(std::move(translation))};
  if (d > 1) {
    const std::uint64_t a = pow_mod(primitive_root(p), (p - 1) / d, p);
    std::vector<Point> scaling(p);
    for (std::size_t i = 0; i < p; ++i) scaling[i] = static_cast<Point>((a * i) % p);
    gens.emplace_back(std::move(scaling));
  }
  return PermGroup(p, std::move(gens));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(g.shifted(0, n));
  for (const auto& g : b.generators()) gens.push_back(g.shifted(a.degree(), n));
  return PermGroup(n, std::move(gens));
}

PermGroup central_product_sl2(std::size_t q, std::size_t m) {
  if (q % 2 == 0) throw Error("CentralProd needs SL(2,q) with q odd");
  if (m == 0) throw Error("CentralProd needs C(2m) with m >= 1");
  const PermGroup l = special_linear(q);
  const PermGroup c = cyclic(2 * m);
  const PermGroup product = direct_product(l, c);
  const Permutation z = special_linear_negation(q).shifted(0, product.degree()) *
                        c.generators().front().pow(static_cast<long long>(m)).shifted(l.degree(), product.degree());
  return quotient_by(product, PermGroup(product.degree(), {z}));
}

PermGroup group_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("group file is not valid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators")) {
    throw ParseError("group file must be an object with \"degree\" and \"generators\"", 0);
  }
  if (!doc["degree"].is_number_unsigned() || doc["degree"].get<std::size_t>() == 0) {
    throw ParseError("\"degree\" must be a positive integer", 0);
  }
  const auto degree = doc["degree"].get<std::size_t>();
  if (!doc["generators"].is_array()) throw ParseError("\"generators\" must be an array", 0);
  std::vector<Permutation> gens;
  for (const auto& item : doc["generators"]) {
    if (item.is_string()) {
      gens.push_back(parse_cycles(item.get<std::string>(), degree));
    } else if (item.is_array()) {
      std::vector<Point> images;
      for (const auto& v : item) {
        if (!v.is_number_unsigned()) throw ParseError("image arrays must hold nonnegative integers", 0);
        images.push_back(v.get<Point>());
      }
      if (images.size() != degree) {
        throw ParseError("image array has length " + std::to_string(images.size()) + ", expected " +
                             std::to_string(degree),
                         0);
      }
      try {
        gens.emplace_back(std::move(images));
      } catch (const std::invalid_argument&) {
        throw ParseError("image array is not a permutation", 0);
      }
    } else {
      throw ParseError("generator must be an image array or a cycle string", 0);
    }
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup group_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file " + path.string(), 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return group_from_json(buf.str());
}

std::string group_to_json(const PermGroup& g) {
  nlohmann::ordered_json doc;
  doc["degree"] = g.degree();
  doc["generators"] = nlohmann::json::array();
  for (const auto& s : g.generators()) doc["generators"].push_back(to_cycle_string(s));
  return doc.dump();
}

}  // namespace acdkit
