#include "doctest.h"

#include <cmath>
#include <optional>
#include <string>

#include "netcalc/net.hpp"

using namespace netcalc;

TEST_CASE("net valuation must match its carrier") {
  auto d = DirectedSet::nat_trunc(3);
  CHECK_NOTHROW(Net<double>(d, {1.0, 2.0, 3.0}));
  CHECK_THROWS_AS(Net<double>(d, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("entrywise map keeps the index set and transforms values") {
  auto d = DirectedSet::nat_trunc(5);
  std::vector<double> vals;
  for (int n = 0; n < 5; ++n) vals.push_back(1.0 / (n + 1));
  Net<double> s(d, vals);
  auto t = map_net([](double x) { return 2.0 * x; }, s);
  CHECK(t.index->same_as(*d));
  CHECK(t.at(0) == doctest::Approx(2.0));
  CHECK(t.at(4) == doctest::Approx(0.4));
}

TEST_CASE("identity and composition laws on sample nets") {
  for (const auto& d : enumerate_directed(3)) {
    std::vector<int> vals = {2, 0, 1};
    Net<int> s(d, vals);
    auto id = map_net([](int x) { return x; }, s);
    CHECK(same_valuation(id, s));
    auto f = [](int x) { return x + 1; };
    auto g = [](int x) { return 3 * x; };
    auto composed = map_net([&](int x) { return g(f(x)); }, s);
    auto chained = map_net(g, map_net(f, s));
    CHECK(same_valuation(composed, chained));
  }
}

TEST_CASE("partial map failure names the index element") {
  auto d = DirectedSet::finite({"lo", "mid", "hi"}, {{"lo", "mid"}, {"mid", "hi"}, {"lo", "hi"}});
  Net<double> s(d, {0.5, -0.25, 4.0});
  auto root = [](double x) -> std::optional<double> {
    if (x < 0) return std::nullopt;
    return std::sqrt(x);
  };
  try {
    map_net_partial(root, s);
    FAIL("expected a domain error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("mid") != std::string::npos);
  }
  Net<double> ok(d, {0.25, 1.0, 4.0});
  auto r = map_net_partial(root, ok);
  CHECK(r.at(2) == doctest::Approx(2.0));
}

TEST_CASE("matrix access, rows, columns") {
  auto r = DirectedSet::nat_trunc(2);
  auto c = DirectedSet::nat_trunc(3);
  NetMatrix<int> m(r, c, {1, 2, 3, 4, 5, 6});
  CHECK(m.at(0, 2) == 3);
  CHECK(m.at(1, 0) == 4);
  CHECK(m.row(1).values == std::vector<int>{4, 5, 6});
  CHECK(m.column(2).values == std::vector<int>{3, 6});
  CHECK(m.column(2).index->same_as(*r));
  CHECK(m.row(1).index->same_as(*c));
}

TEST_CASE("transpose swaps indices and is an involution") {
  auto r = DirectedSet::nat_trunc(2);
  auto c = DirectedSet::nat_trunc(3);
  NetMatrix<int> m(r, c, {1, 2, 3, 4, 5, 6});
  auto t = transpose(m);
  CHECK(t.rows->same_as(*c));
  CHECK(t.cols->same_as(*r));
  CHECK(t.at(2, 1) == m.at(1, 2));
  auto back = transpose(t);
  CHECK(back.entries == m.entries);
}

TEST_CASE("net of nets lifts to matrix form") {
  auto outer = DirectedSet::nat_trunc(2);
  auto inner = DirectedSet::nat_trunc(2);
  Net<Net<int>> s(outer, {Net<int>(inner, {1, 2}), Net<int>(inner, {3, 4})});
  auto m = lift_net_of_nets(s);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 3);
  CHECK(m.at(1, 0) == 2);
  CHECK(m.at(1, 1) == 4);
  // round-trip: columns of the lifted matrix are the original members
  for (int j = 0; j < 2; ++j) CHECK(same_valuation(m.column(j), s.at(j)));
}

TEST_CASE("ragged net of nets is rejected") {
  auto outer = DirectedSet::nat_trunc(2);
  Net<Net<int>> ragged(outer, {Net<int>(DirectedSet::nat_trunc(2), {1, 2}),
                               Net<int>(DirectedSet::nat_trunc(3), {3, 4, 5})});
  CHECK_THROWS_AS(lift_net_of_nets(ragged), std::invalid_argument);
}

TEST_CASE("matrix map acts entrywise") {
  auto r = DirectedSet::nat_trunc(2);
  NetMatrix<int> m(r, r, {1, 2, 3, 4});
  auto sq = map_matrix([](int x) { return x * x; }, m);
  CHECK(sq.entries == std::vector<int>{1, 4, 9, 16});
  // mapping commutes with transposition
  auto a = transpose(map_matrix([](int x) { return x + 7; }, m));
  auto b = map_matrix([](int x) { return x + 7; }, transpose(m));
  CHECK(a.entries == b.entries);
}

TEST_CASE("constant net") {
  auto d = DirectedSet::nat_trunc(4);
  auto s = constant_net(d, 3.5);
  CHECK(s.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(s.at(i) == 3.5);
}
