#include <cmath>

#include "doctest.h"
#include "netcalc/calculus.hpp"

using namespace netcalc;

namespace {

IntervalGrid unit_grid() { return IntervalGrid{0.0, 1.0, 257}; }

const CheckRecord& find_record(const std::vector<CheckRecord>& recs, const std::string& check,
                               const std::string& sample) {
  for (const auto& r : recs)
    if (r.check == check && r.sample == sample) return r;
  throw std::logic_error("no record " + check + " / " + sample);
}

}  // namespace

TEST_CASE("difference quotients are exact dyadic arithmetic on the grid") {
  auto sq = make_function("poly:0,0,1", unit_grid());
  CHECK(difference_quotient(sq, 0.5, 0.25) == 1.25);
  CHECK(difference_quotient(sq, 0.5, -0.25) == 0.75);
  CHECK_THROWS_AS(difference_quotient(sq, 0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(difference_quotient(sq, 0.3, 0.25), std::domain_error);
  CHECK_THROWS_AS(difference_quotient(sq, 0.875, 0.25), std::domain_error);
}

TEST_CASE("forward differences live on a one-point-shorter grid") {
  auto g = unit_grid();
  auto d = grid_derivative(make_function("poly:0,0,1", g));
  CHECK(d.grid.resolution == 256);
  CHECK(d.grid.b == 1.0 - 1.0 / 256.0);
  CHECK(d.name == "D[poly[0,0,1]]");
  // slope of x^2 sampled forward: 2x + step, exactly
  CHECK(d.at(128) == 1.0 + 1.0 / 256.0);
  CHECK(d.ev(0.25) == 0.5 + 1.0 / 256.0);
}

TEST_CASE("quotient nets alternate increment signs toward the finest step") {
  auto sq = make_function("poly:0,0,1", unit_grid());
  auto q = quotient_net(sq, 0.5);
  REQUIRE(q.size() == 7);
  CHECK(q.at(0) == 1.25);    // h = +1/4
  CHECK(q.at(1) == 0.875);   // h = -1/8
  CHECK(q.at(6) == 1.0 + 1.0 / 256.0);
}

TEST_CASE("the slope of the square detects as the finest forward quotient") {
  auto sq = make_function("poly:0,0,1", unit_grid());
  auto d = differentiate(sq, 0.5, 1e-3, 8);
  CHECK(d.accept_tol == 0.0625);  // 16 grid steps dominate the requested 1e-3
  CHECK(d.limit.converged);
  CHECK(d.limit.value == 1.00390625);
  CHECK(d.limit.residual == 0.01171875);  // |q(-1/128) - q(+1/256)| = 3/256
}

TEST_CASE("a corner admits no slope but flat stretches do") {
  auto kink = make_function("kink", unit_grid());
  auto at_corner = differentiate(kink, 0.5, 1e-3, 8);
  CHECK_FALSE(at_corner.limit.converged);
  CHECK(at_corner.limit.spread == 2.0);
  CHECK(at_corner.limit.residual == 2.0);
  auto left = differentiate(kink, 0.25, 1e-3, 8);
  CHECK(left.limit.converged);
  CHECK(left.limit.value == -1.0);
  CHECK(left.limit.residual == 0.0);
}

TEST_CASE("detected slopes of cubics stay within the curvature-step bound") {
  auto g = unit_grid();
  const char* specs[] = {"poly:0,0,1", "poly:1,-2,3", "poly:0,0,0,1", "poly:0.5,1,-1,0.25"};
  double coeffs[][4] = {{0, 0, 1, 0}, {1, -2, 3, 0}, {0, 0, 0, 1}, {0.5, 1, -1, 0.25}};
  for (int i = 0; i < 4; ++i) {
    auto info = make_function_info(specs[i], g);
    for (double a : {0.25, 0.5, 0.75}) {
      auto d = differentiate(info.fn, a, 1e-3, 8);
      REQUIRE(d.limit.converged);
      double exact = coeffs[i][1] + 2.0 * coeffs[i][2] * a + 3.0 * coeffs[i][3] * a * a;
      CHECK(std::abs(d.limit.value - exact) <=
            info.traits.sup_curvature * g.step() + 1e-12);
    }
  }
}

TEST_CASE("quotient matrices put one member's quotient net in each column") {
  auto fam = make_family("square_plus_decay", 64, unit_grid());
  auto m = quotient_matrix(fam, 0.5);
  CHECK(m.rows->size() == 7);
  CHECK(m.cols->size() == 64);
  CHECK(m.at(0, 63) == difference_quotient(fam.members.at(63), 0.5, 0.25));
  CHECK(same_valuation(m.column(5), quotient_net(fam.members.at(5), 0.5)));
}

TEST_CASE("slope passes through the limit for the settling family") {
  auto fam = make_family("square_plus_decay", 64, unit_grid());
  auto recs = check_diff_theorem(fam, DiffTheoremConfig{});
  REQUIRE(recs.size() == 2 + 5 * 3);
  for (const auto& r : recs) CHECK(r.verdict == Verdict::pass);

  const auto& cc = find_record(recs, "diff-theorem:conclusion", "square_plus_decay@x=0.5");
  CHECK(cc.theorem);
  CHECK(cc.residual == 0.0);  // both sides are the same dyadic lookup
  CHECK(cc.lhs == 1.0 + 1.0 / 256.0 + 1.0 / 64.0);

  const auto& ex = find_record(recs, "diff-theorem:exchange", "square_plus_decay@x=0.25");
  CHECK(ex.residual == 0.0);
}

TEST_CASE("fast waves fail every slope hypothesis honestly") {
  auto g = unit_grid();
  auto fam = make_family("fast_waves", 64, g);
  auto recs = check_diff_theorem(fam, DiffTheoremConfig{});
  REQUIRE(recs.size() == 2 + 5 * 3);
  for (const auto& r : recs) CHECK(r.verdict == Verdict::hypothesis_not_met);

  const auto& head = find_record(recs, "diff-theorem:function-net", "fast_waves");
  double sup62 = 0.0;
  for (int k = 0; k < g.resolution; ++k) {
    double x = g.point_at(k);
    sup62 = std::max(sup62, std::abs(std::sin(3969.0 * x) / 63.0 - std::sin(4096.0 * x) / 64.0));
  }
  CHECK(head.residual == doctest::Approx(sup62).epsilon(1e-9));

  for (const char* x : {"0.25", "0.375", "0.5", "0.625", "0.75"}) {
    std::string sid = std::string("fast_waves@x=") + x;
    const auto& pw = find_record(recs, "diff-theorem:pointwise-derivative", sid);
    CHECK(pw.residual >= 1.0);  // the slope net tail stays wide open
    CHECK(pw.residual > 4.0);
    CHECK(pw.residual < 10.0);
    const auto& cc = find_record(recs, "diff-theorem:conclusion", sid);
    CHECK(cc.witness.find("diverges") != std::string::npos);
    CHECK(cc.residual >= 1.0);
  }
}

TEST_CASE("anchors too close to the edge are rejected") {
  auto fam = make_family("square_plus_decay", 64, unit_grid());
  DiffTheoremConfig cfg;
  cfg.anchors = {0.9};
  CHECK_THROWS_AS(check_diff_theorem(fam, cfg), std::invalid_argument);
}
