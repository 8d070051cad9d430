#include "doctest.h"

#include <stdexcept>

#include "netcalc/directed.hpp"

using namespace netcalc;

TEST_CASE("three element chain is a valid directed set") {
  auto d = DirectedSet::finite({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
  auto v = validate_directed(*d);
  CHECK(v.ok);
  CHECK(v.violations.empty());
  CHECK(d->leq(d->index_of("1"), d->index_of("3")));
  CHECK_FALSE(d->leq(d->index_of("3"), d->index_of("1")));
  CHECK(d->canonical_top() == d->index_of("3"));
}

TEST_CASE("two element antichain fails directedness with a named witness") {
  auto d = DirectedSet::finite({"a", "b"}, {});
  auto v = validate_directed(*d);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].kind == DirectedViolation::Kind::upper_bound);
  CHECK(v.violations[0].elements == std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(upper_bound(*d, 0, 1), std::domain_error);
  CHECK_THROWS_AS(d->canonical_top(), std::domain_error);
}

TEST_CASE("divisibility order on {1,2,3,6}") {
  auto d = DirectedSet::finite({"1", "2", "3", "6"},
                               {{"1", "2"}, {"1", "3"}, {"1", "6"}, {"2", "6"}, {"3", "6"}});
  CHECK(validate_directed(*d).ok);
  CHECK(upper_bound(*d, d->index_of("2"), d->index_of("3")) == d->index_of("6"));
  // first bound in enumeration order, not the join of the whole carrier
  CHECK(upper_bound(*d, d->index_of("1"), d->index_of("2")) == d->index_of("2"));
  CHECK(d->canonical_top() == d->index_of("6"));
  auto tl = d->tail(d->index_of("2"));
  CHECK(tl == std::vector<int>{d->index_of("2"), d->index_of("6")});
}

TEST_CASE("broken transitivity is caught with a witness triple") {
  // a<=b, b<=c but not a<=c
  auto d = DirectedSet::finite_by_index({"a", "b", "c"}, {{0, 1}, {1, 2}});
  auto v = validate_directed(*d);
  REQUIRE_FALSE(v.ok);
  bool found = false;
  for (const auto& viol : v.violations)
    if (viol.kind == DirectedViolation::Kind::transitivity &&
        viol.elements == std::vector<std::string>{"a", "b", "c"})
      found = true;
  CHECK(found);
}

TEST_CASE("truncated naturals") {
  auto d = DirectedSet::nat_trunc(64);
  CHECK(d->size() == 64);
  CHECK(d->leq(3, 17));
  CHECK_FALSE(d->leq(17, 3));
  CHECK(d->canonical_top() == 63);
  CHECK(d->tail(62) == std::vector<int>{62, 63});
  CHECK(validate_directed(*d).ok);
  CHECK(d->label(5) == "5");
}

TEST_CASE("product order is componentwise") {
  auto a = DirectedSet::nat_trunc(3);
  auto b = DirectedSet::nat_trunc(4);
  auto p = DirectedSet::product(a, b);
  CHECK(p->size() == 12);
  CHECK(validate_directed(*p).ok);
  // (1,2) <= (2,3), incomparable to (0,3)
  CHECK(p->leq(p->pair_index(1, 2), p->pair_index(2, 3)));
  CHECK_FALSE(p->leq(p->pair_index(1, 2), p->pair_index(0, 3)));
  CHECK_FALSE(p->leq(p->pair_index(0, 3), p->pair_index(1, 2)));
  CHECK(p->canonical_top() == p->pair_index(2, 3));
  CHECK(p->label(p->pair_index(1, 2)) == "(1,2)");
  int ub = upper_bound(*p, p->pair_index(1, 2), p->pair_index(0, 3));
  CHECK(ub == p->pair_index(1, 3));
}

TEST_CASE("product of directed sets with an antichain factor fails validation") {
  auto anti = DirectedSet::finite({"a", "b"}, {});
  auto p = DirectedSet::product(DirectedSet::nat_trunc(2), anti);
  CHECK_FALSE(validate_directed(*p).ok);
}

TEST_CASE("product is associative up to the flat index bijection") {
  auto a = DirectedSet::nat_trunc(2);
  auto b = DirectedSet::nat_trunc(3);
  auto c = DirectedSet::nat_trunc(2);
  auto lhs = DirectedSet::product(DirectedSet::product(a, b), c);
  auto rhs = DirectedSet::product(a, DirectedSet::product(b, c));
  REQUIRE(lhs->size() == rhs->size());
  // both enumerations are lexicographic in (a, b, c), so indices line up
  for (int i = 0; i < lhs->size(); ++i)
    for (int j = 0; j < lhs->size(); ++j)
      CHECK(lhs->leq(i, j) == rhs->leq(i, j));
}

TEST_CASE("enumeration of small directed preorders hits the known counts") {
  CHECK(enumerate_directed(1).size() == 1);
  CHECK(enumerate_directed(2).size() == 3);
  CHECK(enumerate_directed(3).size() == 16);
  for (const auto& d : enumerate_directed(3)) {
    CHECK(validate_directed(*d).ok);
    CHECK_NOTHROW(d->canonical_top());
  }
}

TEST_CASE("same_as distinguishes carriers and shapes") {
  auto a = DirectedSet::nat_trunc(4);
  auto b = DirectedSet::nat_trunc(4);
  auto c = DirectedSet::nat_trunc(5);
  CHECK(a->same_as(*b));
  CHECK_FALSE(a->same_as(*c));
  auto t = DirectedSet::finite({"0", "1"}, {{"0", "1"}});
  CHECK_FALSE(a->same_as(*t));
  auto t2 = DirectedSet::finite({"0", "1"}, {{"0", "1"}});
  CHECK(t->same_as(*t2));
}

TEST_CASE("empty carrier is rejected") {
  CHECK_THROWS_AS(DirectedSet::finite({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(DirectedSet::nat_trunc(0), std::invalid_argument);
}
