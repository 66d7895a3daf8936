#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "acdkit/error.hpp"
#include "acdkit/group_expr.hpp"
#include "acdkit/named_groups.hpp"
#include "oracles.hpp"

using namespace acdkit;

namespace {

std::vector<std::uint64_t> sorted_sizes(const ClassData& cd) {
  std::vector<std::uint64_t> s = cd.sizes;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation a = parse_cycles("(0 1 2)", 4);
  const Permutation b = parse_cycles("(0,1)", 4);
  CHECK((a * b)[0] == b[a[0]]);
  CHECK(a.order() == 3);
  CHECK(a.pow(3).is_identity());
  CHECK(a.pow(-1) == a.inverse());
  CHECK(b.conjugate_by(a) == a.inverse() * b * a);
  CHECK(to_cycle_string(Permutation::identity(3)) == "()");
  CHECK(parse_cycles(to_cycle_string(a * b), 4) == a * b);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1 0)", 3), ParseError);
}

TEST_CASE("named constructors have the right orders") {
  CHECK(construct("A(5)").order() == 60);
  CHECK(construct("A(5)").degree() == 5);
  CHECK(construct("S(4)").order() == 24);
  CHECK(construct("C(1)").order() == 1);
  CHECK(construct("D(7)").order() == 14);
  CHECK(construct("D(1)").order() == 2);
  CHECK(construct("D(2)").order() == 4);
  CHECK(construct("Aff(7,3)").order() == 21);
  CHECK(construct("Aff(7,3)").degree() == 7);
  CHECK(construct("PSL(2,7)").order() == 168);
  CHECK(construct("PSL(2,9)").order() == 360);
  CHECK(construct("SL(2,9)").order() == 720);
  CHECK(construct("S(3) x C(4)").order() == 24);
  CHECK_THROWS_AS(construct("Aff(7,4)"), Error);
}

TEST_CASE("SL(2,q) matches a matrix count") {
  for (std::uint64_t q : {3, 5, 7}) {
    const PermGroup g = special_linear(q);
    CHECK(g.degree() == q * q - 1);
    CHECK(g.order() == oracle::sl2_matrix_count(q));
    CHECK(oracle::closure_of(g).size() == oracle::sl2_matrix_count(q));
  }
}

TEST_CASE("central product order via coset enumeration") {
  const PermGroup l = special_linear(5);
  const PermGroup c = cyclic(4);
  const PermGroup prod = direct_product(l, c);
  const Permutation z = special_linear_negation(5).shifted(0, prod.degree()) *
                        c.generators().front().pow(2).shifted(l.degree(), prod.degree());
  const oracle::Group big = oracle::closure_of(prod);
  const std::vector<bool> n = oracle::generated(big, {big.index({z.images().begin(), z.images().end()})});
  std::set<std::vector<std::uint32_t>> cosets;
  for (std::uint32_t x = 0; x < big.size(); ++x) {
    std::vector<std::uint32_t> coset;
    for (std::uint32_t y = 0; y < big.size(); ++y) {
      if (n[y]) coset.push_back(big.mul[y][x]);
    }
    std::sort(coset.begin(), coset.end());
    cosets.insert(coset);
  }
  CHECK(cosets.size() == 240);
  CHECK(construct("CentralProd(SL(2,5), C(4))").order() == cosets.size());
}

TEST_CASE("enumeration is stable and capped") {
  const PermGroup g = construct("A(5)");
  const ElementStore& e = enumerate_elements(g);
  CHECK(e.size() == 60);
  CHECK(e[0].is_identity());
  const PermGroup again = construct("A(5)");
  CHECK(enumerate_elements(again).elements() == e.elements());
  CHECK(enumerate_elements(construct("C(6)")).size() == 6);
  const PermGroup s9 = symmetric(9);
  CHECK(s9.order() == 362880);
  CHECK_THROWS_WITH_AS(enumerate_elements(s9), doctest::Contains("too large for dense mode"), TooLargeError);
}

TEST_CASE("closure holds on sampled products") {
  const PermGroup g = construct("SL(2,5)");
  const ElementStore& e = g.elements();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
  for (int i = 0; i < 1000; ++i) REQUIRE(e.find(e[pick(rng)] * e[pick(rng)]).has_value());
}

TEST_CASE("conjugacy classes agree with pairwise conjugation") {
  for (const char* expr : {"A(5)", "Aff(7,3)", "S(4)", "D(6)", "SL(2,3)", "PSL(2,7)", "C(2) x C(4)", "A(4) x C(2)"}) {
    CAPTURE(expr);
    const PermGroup g = construct(expr);
    const ClassData& cd = conjugacy_classes(g);
    CHECK(sorted_sizes(cd) == oracle::class_sizes(oracle::closure_of(g)));
    CHECK(cd.reps[0].is_identity());
    CHECK(cd.sizes[0] == 1);
    std::uint64_t total = 0;
    for (auto s : cd.sizes) {
      CHECK(g.small_order() % s == 0);
      total += s;
    }
    CHECK(total == g.small_order());
    // class_of is constant on conjugates
    const ElementStore& e = g.elements();
    for (std::size_t i = 0; i < e.size(); i += 7) {
      for (const auto& gen : g.generators()) CHECK(cd.class_of[e.index_of(e[i].conjugate_by(gen))] == cd.class_of[i]);
    }
  }
  CHECK(sorted_sizes(conjugacy_classes(construct("A(5)"))) == std::vector<std::uint64_t>{1, 12, 12, 15, 20});
  CHECK(sorted_sizes(conjugacy_classes(construct("Aff(7,3)"))) == std::vector<std::uint64_t>{1, 3, 3, 7, 7});
  CHECK(conjugacy_classes(construct("C(9)")).count() == 9);
}

TEST_CASE("power maps compose") {
  const PermGroup g = construct("SL(2,5)");
  const ClassData& cd = g.classes();
  for (std::size_t j = 0; j < cd.count(); ++j) {
    CHECK(cd.power(j, 1) == j);
    CHECK(cd.power(j, 0) == 0);
    const auto o = static_cast<long long>(cd.element_orders[j]);
    for (long long k1 = 0; k1 < 7; ++k1) {
      CHECK(cd.power(j, k1) == cd.power(j, k1 + o));
      for (long long k2 = 0; k2 < 7; ++k2) CHECK(cd.power(cd.power(j, k1), k2) == cd.power(j, (k1 * k2) % o));
    }
  }
  CHECK(cd.exponent == 60);
}

TEST_CASE("normal closure") {
  const PermGroup s3 = symmetric(3);
  CHECK(normal_closure(s3, {parse_cycles("(0 1 2)", 3)}).order() == 3);
  const PermGroup a5 = alternating(5);
  CHECK(normal_closure(a5, {parse_cycles("(0 1)(2 3)", 5)}).order() == 60);
  const PermGroup s4 = symmetric(4);
  const Permutation dt = parse_cycles("(0 1)(2 3)", 4);
  const oracle::Group og = oracle::closure_of(s4);
  const auto expected = oracle::count(oracle::normal_closure(og, {og.index({dt.images().begin(), dt.images().end()})}));
  CHECK(expected == 4);
  CHECK(normal_closure(s4, {dt}).order() == expected);
}

TEST_CASE("derived series and solvability") {
  CHECK_FALSE(is_solvable(construct("A(5)")));
  CHECK_FALSE(is_solvable(construct("SL(2,5)")));
  CHECK(is_solvable(construct("S(4)")));
  CHECK(is_solvable(construct("C(1)")));
  const auto series = derived_series(construct("C(12)"));
  REQUIRE(series.size() == 2);
  CHECK(series.back().is_trivial());
  const auto s4 = derived_series(construct("S(4)"));
  std::vector<BigInt> orders;
  for (const auto& h : s4) orders.push_back(h.order());
  CHECK(orders == std::vector<BigInt>{24, 12, 4, 1});
}

TEST_CASE("p-residual and normal p-complements") {
  CHECK(p_residual(construct("S(3)"), 2).order() == 3);
  CHECK(p_residual(construct("A(5)"), 2).order() == 60);
  CHECK(p_residual(construct("C(12)"), 2).order() == 3);
  CHECK(has_normal_p_complement(construct("S(3)"), 2));
  CHECK_FALSE(has_normal_p_complement(construct("S(3)"), 3));
  CHECK_FALSE(has_normal_p_complement(construct("A(4)"), 2));
  CHECK(has_normal_p_complement(construct("A(5)"), 7));

  for (const char* expr : {"S(3)", "S(4)", "A(4)", "D(5)", "D(6)", "Aff(7,3)", "SL(2,3)", "C(3) x S(3)", "D(4) x C(2)"}) {
    CAPTURE(expr);
    const PermGroup g = construct(expr);
    const oracle::Group og = oracle::closure_of(g);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      CAPTURE(p);
      CHECK(p_residual(g, p).order() == oracle::p_residual_order(og, p));
      CHECK(has_normal_p_complement(g, p) == oracle::has_normal_p_complement(og, p));
      if (has_normal_p_complement(g, p)) CHECK(p_residual(g, p).small_order() == oracle::p_prime_part(og.size(), p));
    }
  }
}

TEST_CASE("quotients") {
  const PermGroup sl = special_linear(5);
  const PermGroup centre(sl.degree(), {special_linear_negation(5)});
  const PermGroup q = quotient_by(sl, centre);
  CHECK(q.order() == 60);
  CHECK(q.classes().count() == construct("A(5)").classes().count());
  CHECK(quotient_by(sl, PermGroup::trivial(sl.degree())).order() == 120);
  const PermGroup c12 = cyclic(12);
  const PermGroup c4(12, {c12.generators().front().pow(3)});
  CHECK(quotient_by(c12, c4).order() == 3);
  CHECK(quotient_by(c12, c4).order() * c4.order() == c12.order());
  const PermGroup s3 = symmetric(3);
  CHECK_THROWS_AS(quotient_by(s3, PermGroup(3, {parse_cycles("(0 1)", 3)})), Error);
  CHECK_THROWS_AS(quotient_by(s3, PermGroup(4, {parse_cycles("(0 3)", 4)})), Error);
}

TEST_CASE("group expressions") {
  CHECK(parse_group_expr("A(5)").kind == GroupKind::Alternating);
  CHECK(parse_group_expr("Alt(5)") == parse_group_expr("A(5)"));
  const GroupSpec prod = parse_group_expr("SL(2,5) x C(3)");
  CHECK(prod.kind == GroupKind::DirectProduct);
  CHECK(construct(prod).order() == 360);
  CHECK(construct("CentralProd(SL(2,5), C(4))").order() == 240);
  for (const char* text : {"C(4)", "SL(2,5) x C(3)", "C(2) x C(2) x C(2)", "S(3) x (C(2) x C(3))",
                           "CentralProd(SL(2,5), C(4))", "Quot(S(4); (0 1)(2 3), (0 2)(1 3))", "Aff(7,3)",
                           "DirectProduct(A(4), C(2))", "PSL(2,7)", "File(\"x.json\")"}) {
    CAPTURE(text);
    const GroupSpec s = parse_group_expr(text);
    CHECK(parse_group_expr(render(s)) == s);
  }
  CHECK(construct("Quot(S(4); (0 1)(2 3), (0 2)(1 3))").order() == 6);
  CHECK_THROWS_AS(parse_group_expr("Foo(3)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("C(3,4)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("C(3x)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("C(3"), ParseError);
  CHECK_THROWS_AS(construct("Quot(S(3); (0 1))"), Error);
}

TEST_CASE("group files") {
  const PermGroup g = group_from_json(R"j({"degree": 4, "generators": [[1,2,3,0], "(0 2)"]})j");
  CHECK(g.order() == 8);
  const PermGroup back = group_from_json(group_to_json(g));
  CHECK(back.order() == 8);
  CHECK(back.degree() == 4);
  CHECK_THROWS_AS(group_from_json("{\"degree\": 3}"), ParseError);
  CHECK_THROWS_AS(group_from_json("{\"degree\": 3, \"generators\": [[0,0,1]]}"), ParseError);
  CHECK_THROWS_AS(group_from_json("not json"), ParseError);
}
