#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "netcalc/space.hpp"

using namespace netcalc;

namespace {

FiniteSpace sierpinski() {
  return FiniteSpace::from_opens({"a", "b"}, {{}, {"b"}, {"a", "b"}});
}

Net<double> reciprocal_net(int depth) {
  std::vector<double> vals;
  for (int n = 0; n < depth; ++n) vals.push_back(1.0 / (n + 1));
  return Net<double>(DirectedSet::nat_trunc(depth), std::move(vals));
}

}  // namespace

TEST_CASE("two point space with one nontrivial open") {
  FiniteSpace sp = sierpinski();
  CHECK(sp.validate().ok);
  CHECK(sp.minimal_open(sp.index_of("a")) == 0b11);
  CHECK(sp.minimal_open(sp.index_of("b")) == 0b10);
  auto h = sp.hausdorff();
  CHECK_FALSE(h.hausdorff);
  CHECK(h.witness == "(a,b)");
}

TEST_CASE("constant net at the coarse point converges to both points") {
  FiniteSpace sp = sierpinski();
  auto d = DirectedSet::nat_trunc(8);
  auto s = constant_net(d, sp.index_of("b"));
  CHECK(sp.converges_to(s, sp.index_of("a")));
  CHECK(sp.converges_to(s, sp.index_of("b")));
  // the limit oracle refuses to pick one
  try {
    sp.limit(s);
    FAIL("expected a separation error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("separation error") != std::string::npos);
    CHECK(std::string(e.what()).find("(a,b)") != std::string::npos);
  }
}

TEST_CASE("discrete space separates everything and has unique limits") {
  FiniteSpace sp = FiniteSpace::discrete(3);
  CHECK(sp.validate().ok);
  CHECK(sp.hausdorff().hausdorff);
  auto d = DirectedSet::nat_trunc(10);
  std::vector<int> vals = {0, 1, 0, 2, 2, 2, 2, 2, 2, 2};
  auto out = sp.limit(Net<int>(d, vals));
  CHECK(out.converged);
  CHECK(out.value == 2);
  CHECK(out.residual == 0.0);
  // a truncated chain always converges to its final value, even alternating
  std::vector<int> alt = {0, 1, 0, 1, 0, 1, 0, 1, 0, 1};
  auto last = sp.limit(Net<int>(d, alt));
  CHECK(last.converged);
  CHECK(last.value == 1);
}

TEST_CASE("two equivalent top elements with different values admit no limit") {
  FiniteSpace sp = FiniteSpace::discrete(2);
  // a ~ b: each bounds the other, so every tail contains both
  auto d = DirectedSet::finite_by_index({"a", "b"}, {{0, 1}, {1, 0}});
  REQUIRE(validate_directed(*d).ok);
  auto none = sp.limit(Net<int>(d, {0, 1}));
  CHECK_FALSE(none.converged);
  CHECK(none.reason == "no point absorbs a tail of the net");
  // with equal values the limit is back
  auto both = sp.limit(Net<int>(d, {1, 1}));
  CHECK(both.converged);
  CHECK(both.value == 1);
}

TEST_CASE("missing closure under union is reported") {
  FiniteSpace sp = FiniteSpace::from_opens({"a", "b", "c"},
                                           {{}, {"a"}, {"b"}, {"a", "b", "c"}});
  auto v = sp.validate();
  REQUIRE_FALSE(v.ok);
  bool mentions_union = false;
  for (const auto& p : v.problems)
    if (p.what.find("union") != std::string::npos) mentions_union = true;
  CHECK(mentions_union);
}

TEST_CASE("up-sets of a chain preorder give the nested topology") {
  FiniteSpace sp = FiniteSpace::from_preorder(2, [](int x, int y) { return x <= y; });
  CHECK(sp.opens().size() == 3);
  CHECK(sp.minimal_open(0) == 0b11);
  CHECK(sp.minimal_open(1) == 0b10);
}

TEST_CASE("topology enumeration matches the known counts") {
  CHECK(enumerate_topologies(1).size() == 1);
  CHECK(enumerate_topologies(2).size() == 4);
  CHECK(enumerate_topologies(3).size() == 29);
  for (const auto& sp : enumerate_topologies(3)) CHECK(sp.validate().ok);
}

TEST_CASE("separated finite spaces are exactly the discrete ones") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& sp : enumerate_topologies(n)) {
      bool discrete = sp.opens().size() == (1u << n);
      CHECK(sp.hausdorff().hausdorff == discrete);
    }
  }
}

TEST_CASE("tail containment can be checked at the top class only") {
  // convergence in a finite space is decided by the values above the top
  auto nets_over = [](DirectedSet::Ptr d) {
    std::vector<Net<int>> out;
    int n = d->size();
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<int> vals;
      int c = code;
      for (int i = 0; i < n; ++i) {
        vals.push_back(c % 3);
        c /= 3;
      }
      out.emplace_back(d, vals);
    }
    return out;
  };
  for (const auto& sp : enumerate_topologies(3)) {
    for (const auto& d : enumerate_directed(2)) {
      for (const auto& s : nets_over(d)) {
        for (int x = 0; x < 3; ++x) {
          bool full = sp.converges_to(s, x);
          bool shortcut = true;
          std::uint32_t tgt = sp.minimal_open(x);
          for (int j : d->tail(d->canonical_top()))
            if (!(tgt & (1u << s.at(j)))) shortcut = false;
          CHECK(full == shortcut);
        }
      }
    }
  }
}

TEST_CASE("reciprocal net settles near zero within the printed residual") {
  RealLine line;
  auto out = detect_limit(line, reciprocal_net(64), 1e-3, 8);
  CHECK(out.converged);
  CHECK(out.value == doctest::Approx(1.0 / 64).epsilon(1e-12));
  // residual is the exact gap between the last two members
  CHECK(out.residual == doctest::Approx(1.0 / 63 - 1.0 / 64).epsilon(1e-12));
  CHECK(out.level == 2);
  CHECK(out.anchor_label == "62");
  // the detector reports where it stopped, not the ideal limit: the value
  // sits 2^-6 away from zero and the residual bounds the tail, nothing more
  CHECK(std::abs(out.value - 0.0) == doctest::Approx(std::ldexp(1.0, -6)));
}

TEST_CASE("alternating net is refused with residual one") {
  RealLine line;
  std::vector<double> vals;
  for (int n = 0; n < 64; ++n) vals.push_back(n % 2 ? 1.0 : 0.0);
  Net<double> s(DirectedSet::nat_trunc(64), vals);
  auto out = detect_limit(line, s, 1e-3, 8);
  CHECK_FALSE(out.converged);
  CHECK(out.residual == 1.0);
  CHECK(out.spread == 1.0);
  CHECK(out.reason.find("tail spread") != std::string::npos);
}

TEST_CASE("budget deepens the level but never flips the verdict") {
  RealLine line;
  auto s = reciprocal_net(64);
  auto shallow = detect_limit(line, s, 1e-3, 0);
  auto deep = detect_limit(line, s, 1e-3, 16);
  CHECK(shallow.converged == deep.converged);
  CHECK(shallow.value == deep.value);
  CHECK(shallow.level == 0);
  CHECK(deep.level == 2);

  std::vector<double> osc;
  for (int n = 0; n < 64; ++n) osc.push_back(n % 2 ? 1.0 : 0.0);
  Net<double> bad(DirectedSet::nat_trunc(64), osc);
  CHECK(detect_limit(line, bad, 1e-3, 0).converged ==
        detect_limit(line, bad, 1e-3, 16).converged);
}

TEST_CASE("eventually constant net exhausts the whole budget") {
  RealLine line;
  std::vector<double> vals(64, 0.25);
  vals[0] = 9.0;
  vals[1] = -3.0;
  auto out = detect_limit(line, Net<double>(DirectedSet::nat_trunc(64), vals), 1e-3, 8);
  CHECK(out.converged);
  CHECK(out.value == 0.25);
  CHECK(out.residual == 0.0);
  CHECK(out.level == 8);
  CHECK(out.spread == doctest::Approx(8.75));
}

TEST_CASE("singleton index converges trivially") {
  RealLine line;
  auto out = detect_limit(line, Net<double>(DirectedSet::nat_trunc(1), {7.0}), 1e-3, 8);
  CHECK(out.converged);
  CHECK(out.value == 7.0);
  CHECK(out.residual == 0.0);
}

TEST_CASE("detector works over a product index") {
  // values depend on min of the two coordinates, settling toward 1
  auto rows = DirectedSet::nat_trunc(8);
  auto p = DirectedSet::product(rows, rows);
  std::vector<double> vals;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) vals.push_back(1.0 - 1.0 / (1 + std::min(i, j)));
  RealLine line;
  auto out = detect_limit(line, Net<double>(p, vals), 0.05, 8);
  CHECK(out.converged);
  CHECK(out.value == doctest::Approx(1.0 - 1.0 / 8));
  // best anchor is (6,6): its tail spread is 1/7 - 1/8
  CHECK(out.residual == doctest::Approx(1.0 / 7 - 1.0 / 8));
}

TEST_CASE("max metric on coordinate tuples") {
  RnSpace rn{3};
  CHECK(rn.distance({0, 0, 0}, {1, -2, 0.5}) == 2.0);
  CHECK_THROWS_AS(rn.distance({0, 0}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("uniform and weighted net distance") {
  auto d = DirectedSet::nat_trunc(3);
  Net<double> x(d, {0, 0, 0}), y(d, {0, 0, 1});
  RealLine line;
  NetSpace<RealLine> uni{line, NetMode::uniform};
  NetSpace<RealLine> pw{line, NetMode::pointwise};
  CHECK(uni.distance(x, y) == 1.0);
  CHECK(pw.distance(x, y) == 0.25);  // rank 2 discounted by 2^-2
  Net<double> z(d, {1, 0, 0});
  CHECK(pw.distance(x, z) == 1.0);  // rank 0 carries full weight
  Net<double> w(DirectedSet::nat_trunc(4), {0, 0, 0, 0});
  CHECK_THROWS_AS(uni.distance(x, w), std::invalid_argument);
}

TEST_CASE("matrix limit finds the stabilized column and names the worst row") {
  auto rows = DirectedSet::nat_trunc(4);
  auto cols = DirectedSet::nat_trunc(5);
  // column c approximates (1, 1/2, 1/3, 1/4) with error 2^-c in row 3
  std::vector<double> entries;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 5; ++c)
      entries.push_back(1.0 / (r + 1) + (r == 3 ? std::ldexp(1.0, -c) : 0.0));
  NetMatrix<double> m(rows, cols, entries);
  RealLine line;
  auto res = matrix_limit(line, NetMode::uniform, m, 0.1, 8);
  CHECK(res.outcome.converged);
  CHECK(res.outcome.value.at(0) == doctest::Approx(1.0));
  CHECK(res.outcome.value.at(3) == doctest::Approx(0.25 + std::ldexp(1.0, -4)));
  // residual: columns 3..4 differ from column 4 by 2^-3 - 2^-4 in row 3
  CHECK(res.outcome.residual == doctest::Approx(std::ldexp(1.0, -3) - std::ldexp(1.0, -4)));
  CHECK(res.worst_coordinate == 3);
  CHECK(res.worst_coordinate_spread == doctest::Approx(1.0 - std::ldexp(1.0, -4)));
}

TEST_CASE("pointwise matrix limit forgives deep rows that uniform rejects") {
  auto rows = DirectedSet::nat_trunc(12);
  auto cols = DirectedSet::nat_trunc(6);
  // row r flips between 0 and 1 for r >= 8; shallow rows are constant
  std::vector<double> entries;
  for (int r = 0; r < 12; ++r)
    for (int c = 0; c < 6; ++c) entries.push_back(r >= 8 ? double((r + c) % 2) : 0.5);
  NetMatrix<double> m(rows, cols, entries);
  RealLine line;
  auto uni = matrix_limit(line, NetMode::uniform, m, 1e-2, 8);
  CHECK_FALSE(uni.outcome.converged);
  CHECK(uni.worst_coordinate >= 8);
  CHECK(uni.worst_coordinate_spread == 1.0);
  auto pw = matrix_limit(line, NetMode::pointwise, m, 1e-2, 8);
  CHECK(pw.outcome.converged);  // 2^-8 discount hides the flipping rows
  CHECK(pw.outcome.residual == doctest::Approx(std::ldexp(1.0, -8)));
}

TEST_CASE("uniform grid on the unit interval") {
  IntervalGrid g{0.0, 1.0, 257};
  CHECK(g.step() == doctest::Approx(1.0 / 256).epsilon(1e-15));
  CHECK(g.point_at(0) == 0.0);
  CHECK(g.point_at(256) == 1.0);
  CHECK(g.index_of(0.25) == 64);
  CHECK(g.contains(0.25));
  CHECK_FALSE(g.contains(0.3));
  CHECK_THROWS_AS(g.index_of(0.3), std::domain_error);
  CHECK(g.snap(0.3) == doctest::Approx(77.0 / 256).epsilon(1e-15));
  CHECK(g.snap(-2.0) == 0.0);
  CHECK(g.snap(2.0) == 1.0);
  CHECK(g.describe() == "grid:[0,1]:257");
}

TEST_CASE("neighborhood descriptors") {
  FiniteSpace sp = sierpinski();
  auto nb = sp.neighborhood(sp.index_of("a"), 3);
  CHECK(nb.member_mask == 0b11);
  CHECK(nb.description.find("min_open(a)") != std::string::npos);
  RealLine line;
  auto ball = line.neighborhood(0.5, 2, 1e-3);
  CHECK(ball.radius == doctest::Approx(2.5e-4));
  CHECK(ball.center == 0.5);
}
