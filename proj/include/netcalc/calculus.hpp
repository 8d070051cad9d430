#pragma once

#include "netcalc/funcspace.hpp"

namespace netcalc {

// (f(x+h) - f(x)) / h on grid points. Negative h gives the backward slope;
// a zero increment or an argument off the grid is a domain error.
double difference_quotient(const SampledFunction& f, double x, double h);

// Forward difference at the grid step. The result lives on a grid one point
// shorter at the right edge.
SampledFunction grid_derivative(const SampledFunction& f);

// Quotient net over signed dyadic increments 2^-2, -2^-3, ..., 2^-8. The
// alternating sign makes one-sided slopes disagree across a kink, so a
// corner honestly fails to settle instead of reporting its right slope.
Net<double> quotient_net(const SampledFunction& f, double x);

struct DerivativeOutcome {
  LimitOutcome<double> limit;
  Net<double> quotients;
  double accept_tol = 0.0;  // tolerance the detector ran with
};

// Detect the slope at x as the limit of the quotient net. The acceptance
// tolerance is floored at 16 grid steps: the two finest signed quotients
// differ by about 1.5 curvature units times 3 steps, so this slack accepts
// curvature up to roughly ten while a corner still misses by a full unit.
DerivativeOutcome differentiate(const SampledFunction& f, double x, double diff_tol, int budget);

// Quotients of every family member at x: rows are increments, columns are
// members, so each column is the quotient net of one member.
NetMatrix<double> quotient_matrix(const FunctionFamily& fam, double x);

struct DiffTheoremConfig {
  double detect_tol = 1e-3;
  double diff_tol = 1e-3;
  int budget = 8;
  std::vector<double> anchors = {0.25, 0.375, 0.5, 0.625, 0.75};
  double fail_threshold = 0.5;
};

// Slope-through-the-limit pipeline: the family must settle uniformly, its
// forward-difference family must settle uniformly, and at each anchor the
// memberwise slope net must settle; then the slope of the limit function is
// compared against the limit of the slopes. Quotient matrices provide the
// limit-exchange demonstration at each anchor.
std::vector<CheckRecord> check_diff_theorem(const FunctionFamily& fam,
                                            const DiffTheoremConfig& cfg);

}  // namespace netcalc
