#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netcalc/algebra.hpp"

namespace netcalc {

// A function tabulated on a fixed grid. Evaluation only answers at grid
// points; callers snap first if they mean "nearest".
struct SampledFunction {
  IntervalGrid grid;
  std::vector<double> values;
  std::string name;

  double at(int k) const { return values.at(static_cast<size_t>(k)); }
  double ev(double x) const { return values.at(static_cast<size_t>(grid.index_of(x))); }

  template <class F>
  static SampledFunction tabulate(std::string name, const IntervalGrid& g, F&& f) {
    SampledFunction s;
    s.grid = g;
    s.name = std::move(name);
    s.values.reserve(static_cast<size_t>(g.resolution));
    for (int k = 0; k < g.resolution; ++k) s.values.push_back(f(g.point_at(k)));
    return s;
  }
};

// Distance between tabulated functions: the uniform mode takes the worst grid
// point, the pointwise mode discounts grid rank k by 2^-k. The discount makes
// late grid points negligible, which is what lets a family settle pointwise
// while its uniform distance stays large.
struct FunctionSpace {
  IntervalGrid grid;
  NetMode mode = NetMode::uniform;

  using point = SampledFunction;

  double weight(int rank) const {
    return mode == NetMode::uniform ? 1.0 : std::ldexp(1.0, -std::min(rank, 1000));
  }
  double distance(const SampledFunction& f, const SampledFunction& g) const;
  std::string describe() const;
};

struct FamilyTraits {
  std::string id;
  double sup_curvature = std::numeric_limits<double>::quiet_NaN();  // bound on |f''|
  bool kinked = false;
  double kink_at = std::numeric_limits<double>::quiet_NaN();
};

// A net of functions over a truncated natural index.
struct FunctionFamily {
  FamilyTraits traits;
  Net<SampledFunction> members;
};

// Family specs: "square_plus_decay" (x^2 + x/(n+1)), "powers" (x^n),
// "fast_waves" (sin((n+1)^2 x)/(n+1)), "const:c".
FunctionFamily make_family(const std::string& spec, int depth, const IntervalGrid& g);
std::vector<std::string> known_families();

// Single functions: "poly:c0,c1,..." (ascending coefficients, degree <= 3
// gets a curvature bound), "kink" (|x - 1/2|), "sin:k", "const:c".
SampledFunction make_function(const std::string& spec, const IntervalGrid& g);
struct FunctionInfo {
  SampledFunction fn;
  FamilyTraits traits;
};
FunctionInfo make_function_info(const std::string& spec, const IntervalGrid& g);

// Nets of grid points that settle exactly onto a grid value: a few designed
// shapes (constants, one-sided approaches, a plateau just under 1) plus
// seeded random plateaus. Every value is snapped to the grid and every net
// carries its target as certificate.
std::vector<ConvergingNet<double>> grid_battery(const IntervalGrid& g, int depth, int count,
                                                std::uint64_t seed);

LimitOutcome<SampledFunction> function_net_limit(const FunctionFamily& fam, NetMode mode,
                                                 double tol, int budget);
// grid index with the largest mode-weighted gap between the last two members
int worst_grid_point(const FunctionFamily& fam, NetMode mode);

// Settling in the discounted function metric against settling value by value
// at the grid points the discount can still see.
std::vector<CheckRecord> check_pointwise_agreement(const FunctionFamily& fam, double detect_tol,
                                                   int budget, double accept_tol);

struct MainTheoremConfig {
  NetMode mode = NetMode::uniform;  // mode for the matrix-side demonstrations
  double detect_tol = 1e-3;
  int budget = 8;
  double hyp_tol = 1e-3;
  double accept_tol = 1e-6;
  double fail_threshold = 0.5;
};

// Full pipeline for the limit-through-a-function-net equation: hypothesis
// records (uniform settling of the family, acceptance of each sample net,
// arrows commuting, evaluation commuting), matrix-side demonstrations
// (transposition, mode dominance, limit exchange), and a theorem-tagged
// conclusion record per sample comparing both sides of the equation.
std::vector<CheckRecord> check_main_theorem(const FunctionFamily& fam,
                                            const std::vector<ConvergingNet<double>>& battery,
                                            const MainTheoremConfig& cfg);

}  // namespace netcalc
