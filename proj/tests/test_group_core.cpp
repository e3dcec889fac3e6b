#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>

#include "centlab/group_spec.hpp"
#include "centlab/isoclinism.hpp"
#include "centlab/numeric.hpp"
#include "centlab/structure.hpp"

using namespace centlab;

TEST_SUITE_BEGIN("group-core");

TEST_CASE("from_cayley_table accepts the trivial group and Z2") {
  const FiniteGroup t = FiniteGroup::from_cayley_table({{0}});
  CHECK(t.order() == 1);
  CHECK(t.identity() == 0);

  const FiniteGroup z2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.element_order(1) == 2);
}

TEST_CASE("from_cayley_table rejects malformed tables") {
  // Z3 with one cell clobbered: row 1 repeats an entry.
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}),
                  NotAGroup);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {1}}), NotAGroup);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 7}, {7, 0}}), NotAGroup);
  // Latin square without a two-sided identity.
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}),
                  NotAGroup);
  // A relabeled Z2 (identity at index 1) is accepted.
  CHECK(FiniteGroup::from_cayley_table({{1, 0}, {0, 1}}).identity() == 1);
  // Latin square with identity but not associative (order 5 quasigroup).
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1, 2, 3, 4},
                                                  {1, 0, 3, 4, 2},
                                                  {2, 4, 0, 1, 3},
                                                  {3, 2, 4, 0, 1},
                                                  {4, 3, 1, 2, 0}}),
                  NotAGroup);
}

TEST_CASE("cyclic groups") {
  CHECK(cyclic(1).order() == 1);
  const FiniteGroup z11 = cyclic(11);
  for (elem_t x = 1; x < 11; ++x) CHECK(z11.element_order(x) == 11);
  const FiniteGroup z4 = cyclic(4);
  CHECK(z4.element_order(0) == 1);
  CHECK(z4.element_order(1) == 4);
  CHECK(z4.element_order(2) == 2);
  CHECK(z4.element_order(3) == 4);
  CHECK_THROWS_AS(cyclic(0), InvalidParameter);
  CHECK_THROWS_AS(cyclic(401), CapExceeded);
}

TEST_CASE("dihedral takes the group order") {
  CHECK_THROWS_AS(dihedral(7), InvalidParameter);
  CHECK_THROWS_AS(dihedral(0), InvalidParameter);
  const FiniteGroup d10 = dihedral(10);
  CHECK(d10.order() == 10);
  int involutions = 0;
  for (elem_t x = 0; x < 10; ++x)
    if (d10.element_order(x) == 2) ++involutions;
  CHECK(involutions == 5);
  CHECK(derived_subgroup(dihedral(22)).order() == 11);
}

TEST_CASE("symmetric, alternating, quaternion") {
  CHECK(symmetric(3).order() == 6);
  CHECK(symmetric(1).order() == 1);
  const FiniteGroup a5 = alternating(5);
  CHECK(a5.order() == 60);
  for (elem_t x = 0; x < 60; ++x)
    if (x != a5.identity()) CHECK(is_prime(a5.element_order(x)));
  CHECK_THROWS_AS(alternating(2), InvalidParameter);
  CHECK_THROWS_AS(symmetric(6), CapExceeded);   // 720 over the default cap
  CHECK_THROWS_AS(symmetric(8), CapExceeded);   // over the degree cap

  const FiniteGroup q8 = quaternion8();
  CHECK(q8.order() == 8);
  int order2 = 0;
  for (elem_t x = 0; x < 8; ++x)
    if (q8.element_order(x) == 2) ++order2;
  CHECK(order2 == 1);
}

TEST_CASE("direct products") {
  const FiniteGroup v4 = direct_product(cyclic(2), cyclic(2));
  CHECK(v4.order() == 4);
  for (elem_t x = 1; x < 4; ++x) CHECK(v4.element_order(x) == 2);

  const FiniteGroup g = direct_product(alternating(5), cyclic(2));
  CHECK(g.order() == 120);
  CHECK(center(g).order() == 2);
  CHECK(derived_subgroup(g).order() == 60);

  const FiniteGroup same = direct_product(cyclic(1), symmetric(3));
  REQUIRE(same.order() == 6);
  Limits lim;
  CHECK(is_isomorphic(symmetric(3), same, lim).has_value());

  CHECK_THROWS_AS(direct_product(cyclic(30), cyclic(30)), CapExceeded);
}

TEST_CASE("semidirect product of cyclic primes") {
  const FiniteGroup s3ish = semidirect_cyclic(3, 2);
  CHECK(s3ish.order() == 6);
  CHECK(is_isomorphic(s3ish, symmetric(3)).has_value());

  const FiniteGroup g55 = semidirect_cyclic(11, 5);
  CHECK(g55.order() == 55);
  CHECK_FALSE(g55.is_abelian());
  for (elem_t x = 0; x < 55; ++x)
    if (x != g55.identity()) {
      const int o = g55.element_order(x);
      CHECK((o == 5 || o == 11));
    }

  CHECK(derived_subgroup(semidirect_cyclic(7, 3)).order() == 7);

  CHECK_THROWS_AS(semidirect_cyclic(11, 3), InvalidParameter);  // 3 does not divide 10
  CHECK_THROWS_AS(semidirect_cyclic(4, 2), InvalidParameter);
  CHECK_THROWS_AS(semidirect_cyclic(5, 5), InvalidParameter);
}

TEST_CASE("pgl2 over small prime fields") {
  const FiniteGroup g3 = pgl2(3);
  CHECK(g3.order() == 24);
  CHECK(is_isomorphic(g3, symmetric(4)).has_value());

  Limits big;
  big.iso_cap = 120;
  const FiniteGroup g5 = pgl2(5);
  CHECK(g5.order() == 120);
  CHECK(is_isomorphic(g5, symmetric(5), big).has_value());

  CHECK_THROWS_AS(pgl2(2), InvalidParameter);
  CHECK_THROWS_AS(pgl2(4), InvalidParameter);
  CHECK_THROWS_AS(pgl2(11), CapExceeded);  // 1320 over the default cap
}

TEST_CASE("pgl2(7) has order 336") {
  Limits lim;
  const FiniteGroup g = pgl2(7, lim);
  CHECK(g.order() == 336);
  g.validate(lim);  // sampled associativity on the 336-order table
}

TEST_CASE("quotient groups and projection") {
  const FiniteGroup s3 = symmetric(3);
  const auto subs = all_subgroups(s3);
  REQUIRE(subs.size() == 6);

  const Subgroup a3 = *std::find_if(subs.begin(), subs.end(),
                                    [](const Subgroup& h) { return h.order() == 3; });
  const QuotientResult q = quotient(s3, a3);
  CHECK(q.group.order() == 2);

  // Projection is a homomorphism.
  for (elem_t a = 0; a < 6; ++a)
    for (elem_t b = 0; b < 6; ++b)
      CHECK(q.projection[s3.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));

  const QuotientResult whole = quotient(s3, Subgroup::whole(s3));
  CHECK(whole.group.order() == 1);
  const QuotientResult none = quotient(s3, Subgroup::trivial(s3));
  CHECK(none.group.order() == 6);
  CHECK(is_isomorphic(none.group, s3).has_value());

  const Subgroup refl = *std::find_if(subs.begin(), subs.end(),
                                      [](const Subgroup& h) { return h.order() == 2; });
  CHECK_THROWS_AS(quotient(s3, refl), NotNormal);
  CHECK_THROWS_AS(quotient(s3, Subgroup{{0, 1, 2}}), InvalidParameter);  // not closed
}

TEST_CASE("constructed tables satisfy the group axioms") {
  // validate() re-runs the Latin-square and associativity scans that the
  // trusted constructors skip.
  for (const char* text : {"Z12", "D16", "S4", "A4", "Q8", "Z7:Z3", "Z2xZ4", "PGL(2,3)"}) {
    const FiniteGroup g = realize(parse_spec(text));
    CAPTURE(text);
    CHECK_NOTHROW(g.validate());
    for (elem_t x = 0; x < g.order(); ++x) CHECK(g.order() % g.element_order(x) == 0);
  }
}

TEST_CASE("sampled associativity over larger constructions") {
  const FiniteGroup g = semidirect_cyclic(31, 5);  // order 155
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (int i = 0; i < 20000; ++i) {
    const elem_t a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

TEST_CASE("order formulas for realized specs") {
  const std::pair<const char*, int> cases[] = {
      {"Z17", 17},     {"D34", 34},    {"S5", 120},  {"A5", 60},
      {"Q8", 8},       {"Z3xZ5", 15},  {"Z11:Z5", 55}, {"PGL(2,5)", 120},
      {"Z2xZ2xZ2", 8}, {"(Z2xZ3)xZ4", 24}};
  for (const auto& [text, order] : cases) {
    CAPTURE(text);
    CHECK(realize(parse_spec(text)).order() == order);
  }
}

TEST_CASE("spec grammar round trips and errors") {
  CHECK(parse_spec("Z11:Z5").render() == "Z11:Z5");
  CHECK(parse_spec(" Z2 x Z4 ").render() == "Z2xZ4");
  CHECK(parse_spec("PGL(2,7)").render() == "PGL(2,7)");
  CHECK(parse_spec("Z2xZ11:Z5").render() == "Z2xZ11:Z5");

  // ':' binds tighter than 'x'.
  const GroupSpec mixed = parse_spec("Z2xZ11:Z5");
  REQUIRE(mixed.kind == GroupSpec::Kind::DirectProduct);
  CHECK(mixed.parts[1].kind == GroupSpec::Kind::SemidirectCyclic);

  CHECK_THROWS_AS(parse_spec("Z"), ParseError);
  CHECK_THROWS_AS(parse_spec("Z3:D4"), ParseError);
  CHECK_THROWS_AS(parse_spec("Z3:Z2:Z5"), ParseError);
  CHECK_THROWS_AS(parse_spec("W5"), ParseError);
  CHECK_THROWS_AS(parse_spec("(Z2"), ParseError);
  CHECK_THROWS_AS(parse_spec("Q16"), ParseError);
  CHECK_THROWS_AS(parse_spec(""), ParseError);

  try {
    parse_spec("Z2x!");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("cayley table files") {
  const std::string path = "centlab_test_table.txt";
  {
    std::ofstream out(path);
    out << "3\n0 1 2\n1 2 0\n2 0 1\n";
  }
  const FiniteGroup g = realize(parse_spec("file:" + path));
  CHECK(g.order() == 3);
  CHECK(is_isomorphic(g, cyclic(3)).has_value());

  {
    std::ofstream out(path);
    out << "2\n0 1\n1\n";
  }
  CHECK_THROWS_AS(load_cayley_file(path), NotAGroup);
  CHECK_THROWS_AS(load_cayley_file("does_not_exist.txt"), InvalidParameter);
  std::remove(path.c_str());
}

TEST_SUITE_END();
