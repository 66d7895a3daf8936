#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "acdkit/error.hpp"
#include "acdkit/group_expr.hpp"
#include "acdkit/invariants.hpp"
#include "acdkit/named_groups.hpp"
#include "acdkit/number_theory.hpp"

using namespace acdkit;

namespace {

Rational acd_of(const char* expr, std::uint64_t p, const FieldSpec& f = FieldSpec::all()) {
  return acd_pprime(compute_table(construct(expr)), p, f);
}

std::vector<std::uint64_t> degrees_of(const CharTable& t, const std::vector<std::size_t>& rows) {
  std::vector<std::uint64_t> out;
  for (auto r : rows) out.push_back(t.degree(r));
  return out;
}

PermGroup sl25_centre(const PermGroup& sl) { return PermGroup(sl.degree(), {special_linear_negation(5)}); }

}  // namespace

TEST_CASE("rationals render as num/den") {
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(parse_rational("16/5") == Rational(16, 5));
  CHECK(parse_rational("7") == Rational(7));
}

TEST_CASE("p'-degree selections") {
  const CharTable a5 = compute_table(construct("A(5)"));
  CHECK(degrees_of(a5, irr_pprime(a5, 2)) == std::vector<std::uint64_t>{1, 3, 3, 5});
  const CharTable s4 = compute_table(construct("S(4)"));
  CHECK(irr_pprime(s4, 5).size() == s4.size());
  const CharTable c3 = compute_table(construct("C(3)"));
  CHECK(irr_pprime(c3, 5, FieldSpec::rational()) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(irr_pprime(c3, 4), std::invalid_argument);
}

TEST_CASE("exact averages") {
  CHECK(acd_of("A(4)", 2) == Rational(3, 2));
  CHECK(acd_of("S(3)", 3) == Rational(4, 3));
  CHECK(acd_of("A(5)", 2) == Rational(3));
  CHECK(acd_of("SL(2,5)", 2) == Rational(3));
  CHECK(acd_of("SL(2,5)", 3) == Rational(3));
  CHECK(acd_of("A(5)", 5) == Rational(11, 4));
  CHECK(acd_of("A(5)", 7) == Rational(16, 5));
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    CAPTURE(p);
    const std::string expr = "D(" + std::to_string(p) + ")";
    CHECK(acd_of(expr.c_str(), p) == Rational(2 * p + 2, p + 3));
  }
  CHECK(acd_of("Aff(7,3)", 7, FieldSpec::cyclotomic(7)) == Rational(7, 3));
  CHECK(acd_of("S(4)", 2, FieldSpec::rational()) == Rational(2));
  CHECK(acd_of("C(1)", 2) == Rational(1));
  CHECK(acd(compute_table(construct("C(1)"))) == Rational(1));
}

TEST_CASE("averages over a prime not dividing the order are plain averages") {
  for (const char* expr : {"S(4)", "A(5)", "SL(2,3)", "D(9)"}) {
    const CharTable t = compute_table(construct(expr));
    std::uint64_t p = 7;
    while (t.group_order() % p == 0) p = next_prime(p);
    CHECK(acd_pprime(t, p) == acd(t));
    CHECK(acd_pprime(t, p) >= 1);
  }
}

TEST_CASE("degree profiles cache selections") {
  const CharTable t = compute_table(construct("SL(2,5)"));
  const DegreeProfile profile(t);
  const Selection& a = profile.select(3, FieldSpec::all());
  CHECK(&a == &profile.select(3, FieldSpec::all()));
  CHECK(a.average == Rational(3));
  CHECK(a.degree_sum == 18);
  CHECK(a.rows.size() == 6);
  CHECK(profile.select(0, FieldSpec::all()).counts.at(2) == 2);
  CHECK(n_d(t, 2) == 2);
  CHECK(n_d(t, 6) == 1);
  CHECK(n_d(t, 7) == 0);
}

TEST_CASE("relative counts") {
  const PermGroup sl = construct("SL(2,5)");
  const CharTable t = compute_table(sl);
  const PermGroup z = sl25_centre(sl);
  CHECK(degrees_of(t, relative_rows(t, z)) == std::vector<std::uint64_t>{2, 2, 4, 6});
  CHECK(n_d_relative(t, z, 2) == 2);
  CHECK(n_d_relative(t, z, 4) == 1);
  CHECK(n_d_relative(t, z, 6) == 1);
  CHECK(relative_rows(t, PermGroup::trivial(sl.degree())).empty());
  const PermGroup s3 = construct("S(3)");
  CHECK_THROWS_AS(relative_rows(compute_table(s3), PermGroup(3, {parse_cycles("(0 1)", 3)})), Error);
}

TEST_CASE("counts split over a normal subgroup") {
  struct Case {
    const char* group;
    std::vector<const char*> normal_gens;
  };
  const std::vector<Case> cases = {
      {"S(4)", {"(0 1)(2 3)", "(0 2)(1 3)"}},
      {"S(4)", {"(0 1 2)", "(1 2 3)"}},
      {"D(6)", {"(0 3)(1 4)(2 5)"}},
      {"D(6)", {"(0 2 4)(1 3 5)"}},
      {"C(12)", {"(0 4 8)(1 5 9)(2 6 10)(3 7 11)"}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.group);
    const PermGroup g = construct(c.group);
    std::vector<Permutation> gens;
    for (auto s : c.normal_gens) gens.push_back(parse_cycles(s, g.degree()));
    const PermGroup n(g.degree(), gens);
    const CharTable t = compute_table(g);
    const CharTable tq = compute_table(quotient_by(g, n));
    for (std::uint64_t d = 1; d <= 4; ++d) CHECK(n_d(t, d) == n_d(tq, d) + n_d_relative(t, n, d));
  }
}

TEST_CASE("averages over a central character") {
  const PermGroup sl = construct("SL(2,5)");
  const CharTable t = compute_table(sl);
  const PermGroup z = sl25_centre(sl);
  const Permutation neg = special_linear_negation(5);
  CHECK(acd_pprime_over_central(t, z, cyclic_central_character(z, neg, 1), 7) == Rational(7, 2));
  CHECK(acd_pprime_over_central(t, z, trivial_central_character(z), 7) == Rational(16, 5));
  CHECK(rows_over_central(t, z, cyclic_central_character(z, neg, 1)) == relative_rows(t, z));

  for (const char* expr : {"A(5)", "S(4)", "C(6)"}) {
    const PermGroup g = construct(expr);
    const CharTable tg = compute_table(g);
    const PermGroup one = PermGroup::trivial(g.degree());
    for (std::uint64_t p : {2, 3, 5}) CHECK(acd_pprime_over_central(tg, one, trivial_central_character(one), p) == acd_pprime(tg, p));
  }

  // C6: each of the six linear characters lies over exactly one character of the centre.
  const PermGroup c6 = construct("C(6)");
  const CharTable t6 = compute_table(c6);
  const Permutation gen = c6.generators().front();
  for (std::uint64_t k = 0; k < 6; ++k) CHECK(rows_over_central(t6, c6, cyclic_central_character(c6, gen, k)).size() == 1);

  // Error paths: non-central subgroup, non-homomorphism, incomplete pattern.
  const PermGroup s3 = construct("S(3)");
  const CharTable t3 = compute_table(s3);
  const PermGroup a3(3, {parse_cycles("(0 1 2)", 3)});
  CHECK_THROWS_AS(rows_over_central(t3, a3, trivial_central_character(a3)), Error);
  CentralCharacter bogus = trivial_central_character(z);
  bogus.root_order = 2;
  bogus.values[0].second = 1;  // the identity must map to 1
  CHECK_THROWS_AS(rows_over_central(t, z, bogus), Error);
  CentralCharacter partial = trivial_central_character(z);
  partial.values.pop_back();
  CHECK_THROWS_AS(rows_over_central(t, z, partial), Error);
}
