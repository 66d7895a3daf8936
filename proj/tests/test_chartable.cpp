#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "acdkit/char_table.hpp"
#include "acdkit/group_expr.hpp"
#include "acdkit/number_theory.hpp"
#include "oracles.hpp"

using namespace acdkit;
using cd_t = std::complex<double>;

namespace {

std::vector<std::uint64_t> degrees_of(const char* expr) { return compute_table(construct(expr)).degrees(); }

cd_t numeric(const CyclotomicValue& v, std::uint64_t e) {
  cd_t sum = 0;
  for (const auto& [l, m] : v.terms()) sum += static_cast<double>(m) * std::polar(1.0, 2 * M_PI * l / static_cast<double>(e));
  return sum;
}

// Class of the oracle group containing each library class representative.
std::vector<std::size_t> match_classes(const oracle::Group& og, const std::vector<std::vector<std::uint32_t>>& ocls,
                                       const ClassData& cd) {
  std::vector<std::size_t> out;
  for (const auto& rep : cd.reps) {
    const auto idx = og.index({rep.images().begin(), rep.images().end()});
    for (std::size_t c = 0; c < ocls.size(); ++c) {
      if (std::binary_search(ocls[c].begin(), ocls[c].end(), idx)) out.push_back(c);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("working prime selection") {
  const WorkingField a5 = select_prime(30, 60);
  CHECK(a5.q == 31);
  CHECK(multiplicative_order(a5.w, a5.q) == 30);
  CHECK(select_prime(2, 2).q == 3);
  // q > 2*floor(sqrt(1)) = 2 strictly, so the trivial group also gets 3.
  CHECK(select_prime(1, 1).q == 3);
  for (std::uint64_t e : {1, 2, 6, 12, 60}) {
    for (std::uint64_t n : {1, 24, 120, 10000}) {
      const WorkingField f = select_prime(e, n);
      CHECK(is_prime(f.q));
      CHECK(f.q % e == 1 % e);
      CHECK(f.q > 2 * isqrt(n));
      CHECK(multiplicative_order(f.w, f.q) == e);
    }
  }
  CHECK(select_prime(30, 60, 31).q == 61);
}

TEST_CASE("class matrices") {
  const PermGroup c5 = construct("C(5)");
  for (std::size_t i = 0; i < 5; ++i) {
    const auto m = class_matrix(c5, i);
    for (std::size_t k = 0; k < 5; ++k) {
      std::uint64_t col = 0;
      for (std::size_t j = 0; j < 5; ++j) {
        CHECK(m[j][k] <= 1);
        col += m[j][k];
      }
      CHECK(col == 1);
    }
  }
  const PermGroup a5 = construct("A(5)");
  const auto id = class_matrix(a5, 0);
  for (std::size_t j = 0; j < id.size(); ++j)
    for (std::size_t k = 0; k < id.size(); ++k) CHECK(id[j][k] == (j == k ? 1u : 0u));
  const ClassData& cd = a5.classes();
  std::size_t dt = 0;
  while (!(cd.sizes[dt] == 15)) ++dt;
  const auto m = class_matrix(a5, dt);
  for (std::size_t k = 0; k < m.size(); ++k) {
    std::uint64_t col = 0;
    for (std::size_t j = 0; j < m.size(); ++j) col += m[j][k];
    CHECK(col == 15);
  }
  // Entry by entry against a brute-force count.
  const oracle::Group og = oracle::closure_of(a5);
  const auto ocls = oracle::classes(og);
  const auto a = oracle::structure_constants(og, ocls);
  const auto map = match_classes(og, ocls, cd);
  for (std::size_t i = 0; i < cd.count(); ++i) {
    const auto mi = class_matrix(a5, i);
    for (std::size_t j = 0; j < cd.count(); ++j)
      for (std::size_t k = 0; k < cd.count(); ++k) CHECK(static_cast<double>(mi[j][k]) == a[map[i]][map[j]][map[k]]);
  }
}

TEST_CASE("degrees of the fixture groups") {
  CHECK(degrees_of("A(5)") == std::vector<std::uint64_t>{1, 3, 3, 4, 5});
  CHECK(degrees_of("PSL(2,7)") == std::vector<std::uint64_t>{1, 3, 3, 6, 7, 8});
  CHECK(degrees_of("SL(2,5)") == std::vector<std::uint64_t>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  CHECK(degrees_of("S(4)") == std::vector<std::uint64_t>{1, 1, 2, 3, 3});
  CHECK(degrees_of("C(7)") == std::vector<std::uint64_t>(7, 1));
  CHECK(degrees_of("C(1)") == std::vector<std::uint64_t>{1});
  CHECK(degrees_of("Aff(7,3)") == std::vector<std::uint64_t>{1, 1, 1, 3, 3});
}

TEST_CASE("table invariants") {
  for (const char* expr : {"C(1)", "C(6)", "S(4)", "A(5)", "SL(2,5)", "PSL(2,7)", "D(9)", "Aff(13,4)", "SL(2,3) x C(2)",
                           "CentralProd(SL(2,5), C(4))", "Quot(D(6); (0 3)(1 4)(2 5))"}) {
    CAPTURE(expr);
    const CharTable t = compute_table(construct(expr));
    const auto& cd = t.classes();
    const auto& f = t.field();
    REQUIRE(t.size() == cd.count());
    std::uint64_t sum = 0;
    for (auto d : t.degrees()) {
      sum += d * d;
      CHECK(t.group_order() % d == 0);
    }
    CHECK(sum == t.group_order());
    for (std::size_t j = 0; j < cd.count(); ++j) CHECK(t.value_mod_q(0, j) == 1);
    for (std::size_t r = 0; r < t.size(); ++r) {
      CHECK(t.value_mod_q(r, 0) == t.degree(r) % f.q);
      for (std::size_t j = 0; j < cd.count(); ++j) {
        const CyclotomicValue& v = t.lifted(r, j);
        CHECK(v.total() == t.degree(r));
        std::uint64_t s = 0;
        for (const auto& [l, m] : v.terms()) s = (s + mul_mod(m % f.q, pow_mod(f.w, l, f.q), f.q)) % f.q;
        CHECK(s == t.value_mod_q(r, j));
        CHECK(lift_value(t, r, j) == v);
      }
    }
    // Nonsingular mod q.
    ModMatrix copy = t.values_mod_q();
    CHECK(rref(copy, f.q).size() == t.size());
    CHECK(verify_orthogonality(t).ok);
  }
}

TEST_CASE("lifted values of linear characters") {
  const CharTable t = compute_table(construct("C(3)"));
  const std::uint64_t e = t.field().exponent;
  REQUIRE(e == 3);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(t.lifted(r, 0) == CyclotomicValue(e, {{0, 1}}));
    for (std::size_t j = 0; j < 3; ++j) {
      REQUIRE(t.lifted(r, j).terms().size() == 1);
      CHECK(t.lifted(r, j).terms()[0].second == 1);
    }
  }
  const CharTable a5 = compute_table(construct("A(5)"));
  for (std::size_t j = 0; j < a5.classes().count(); ++j) CHECK(a5.lifted(0, j) == CyclotomicValue(30, {{0, 1}}));
}

TEST_CASE("A5 lifted values agree with a floating-point diagonalization") {
  const PermGroup g = construct("A(5)");
  const CharTable t = compute_table(g);
  const oracle::Group og = oracle::closure_of(g);
  const auto ocls = oracle::classes(og);
  const auto a = oracle::structure_constants(og, ocls);
  const std::size_t r = ocls.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  const double coeff[] = {0.0, 1.0, 0.37, -1.91, 2.53, 0.71, -0.29, 1.13};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) += coeff[i % 8] * a[i][j][k];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  REQUIRE(solver.info() == Eigen::Success);
  std::vector<std::vector<cd_t>> rows;
  for (std::size_t c = 0; c < r; ++c) {
    Eigen::VectorXcd w = solver.eigenvectors().col(static_cast<Eigen::Index>(c));
    w /= w(0);  // the identity class is oracle class 0
    double norm = 0;
    for (std::size_t k = 0; k < r; ++k) norm += std::norm(w(static_cast<Eigen::Index>(k))) / static_cast<double>(ocls[k].size());
    const double d = std::sqrt(60.0 / norm);
    std::vector<cd_t> chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = d * w(static_cast<Eigen::Index>(k)) / static_cast<double>(ocls[k].size());
    rows.push_back(chi);
  }
  const auto map = match_classes(og, ocls, t.classes());
  std::vector<bool> used(r, false);
  for (std::size_t row = 0; row < t.size(); ++row) {
    bool matched = false;
    for (std::size_t o = 0; o < r && !matched; ++o) {
      if (used[o]) continue;
      double err = 0;
      for (std::size_t j = 0; j < r; ++j) err = std::max(err, std::abs(numeric(t.lifted(row, j), 30) - rows[o][map[j]]));
      if (err < 1e-6) used[o] = matched = true;
    }
    CHECK(matched);
  }
  // Degree-3 rows take the golden-ratio values on elements of order 5.
  const double phi = (1 + std::sqrt(5.0)) / 2;
  for (std::size_t j = 0; j < r; ++j) {
    if (t.classes().element_orders[j] != 5) continue;
    const double v1 = numeric(t.lifted(1, j), 30).real();
    const double v2 = numeric(t.lifted(2, j), 30).real();
    CHECK(std::min(std::abs(v1 - phi), std::abs(v1 - (1 - phi))) < 1e-9);
    CHECK(std::abs(v1 + v2 - 1) < 1e-9);
  }
}

TEST_CASE("orthogonality check catches a perturbed entry") {
  const CharTable t = compute_table(construct("C(4)"));
  CHECK(verify_orthogonality(t).ok);
  // Column norms are all |G| = 4 for an abelian group.
  const auto& f = t.field();
  for (std::size_t j = 0; j < 4; ++j) {
    std::uint64_t s = 0;
    const std::size_t jinv = t.classes().inverse_class(j);
    for (std::size_t r = 0; r < 4; ++r) s = (s + mul_mod(t.value_mod_q(r, j), t.value_mod_q(r, jinv), f.q)) % f.q;
    CHECK(s == 4);
  }
  ModMatrix bad = t.values_mod_q();
  bad[2][1] = (bad[2][1] + 1) % f.q;
  const CharTable broken(t.group(), f, t.degrees(), bad, t.lifted());
  const OrthogonalityReport rep = verify_orthogonality(broken);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failure.empty());
}

TEST_CASE("abelian tables match the dual group") {
  for (const char* expr : {"C(1)", "C(6)", "C(12)", "C(2) x C(4)", "C(3) x C(3)", "C(2) x C(2) x C(2)", "C(4) x C(6)"}) {
    CAPTURE(expr);
    const PermGroup g = construct(expr);
    const CharTable t = compute_table(g);
    const std::uint64_t e = t.field().exponent;
    const oracle::Group og = oracle::closure_of(g);
    std::vector<oracle::Images> gens;
    for (const auto& x : g.generators()) gens.emplace_back(x.images().begin(), x.images().end());
    std::set<std::vector<std::uint64_t>> expected;
    for (const auto& row : oracle::abelian_dual(og, gens, e)) {
      std::vector<std::uint64_t> by_class;
      for (const auto& rep : t.classes().reps) by_class.push_back(row[og.index({rep.images().begin(), rep.images().end()})]);
      expected.insert(by_class);
    }
    CHECK(expected.size() == og.size());
    std::set<std::vector<std::uint64_t>> actual;
    for (std::size_t r = 0; r < t.size(); ++r) {
      CHECK(t.degree(r) == 1);
      std::vector<std::uint64_t> by_class;
      for (std::size_t j = 0; j < t.classes().count(); ++j) {
        REQUIRE(t.lifted(r, j).terms().size() == 1);
        by_class.push_back(t.lifted(r, j).terms()[0].first);
      }
      actual.insert(by_class);
    }
    CHECK(actual == expected);
  }
}

TEST_CASE("tables do not depend on the working prime") {
  for (const char* expr : {"S(3)", "A(4)", "S(4)", "A(5)", "D(10)", "Aff(11,5)", "SL(2,3)", "C(3) x S(3)"}) {
    CAPTURE(expr);
    const PermGroup g = construct(expr);
    const CharTable t = compute_table(g);
    const WorkingField next = select_prime(t.field().exponent, t.group_order(), t.field().q);
    REQUIRE(next.q > t.field().q);
    const CharTable u = compute_table(g, next);
    CHECK(u.degrees() == t.degrees());
    CHECK(u.lifted() == t.lifted());
  }
  WorkingField bad = select_prime(60, 60);
  bad.q = 7;
  CHECK_THROWS(compute_table(construct("A(5)"), bad));
}
