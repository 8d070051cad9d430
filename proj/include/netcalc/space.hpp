#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "netcalc/net.hpp"

namespace netcalc {

// Outcome of a limit query. `residual` is the observed spread of the accepted
// tail around the reported value; `spread` is the distance of the farthest net
// member from the candidate, a cheap divergence diagnostic. `level` is the
// deepest refinement level l <= budget with residual <= tol * 2^-l.
template <class P>
struct LimitOutcome {
  bool converged = false;
  P value{};
  double residual = 0.0;
  int level = -1;
  int anchor = -1;
  std::string anchor_label;
  double spread = 0.0;
  std::string reason;
};

struct HausdorffReport {
  bool hausdorff = false;
  std::string witness;  // failing pair "(a,b)", or "metric"
};

struct SpaceProblem {
  std::string what;
};

struct SpaceValidation {
  bool ok = true;
  std::vector<SpaceProblem> problems;
};

struct Neighborhood {
  std::string description;
  std::uint32_t member_mask = 0;  // finite spaces
  double center = 0.0;            // metric spaces
  double radius = 0.0;
};

// Finite topological space over named points; open sets are stored as
// bitmasks. Membership and convergence questions are decided exactly.
class FiniteSpace {
 public:
  using point = int;

  static FiniteSpace from_opens(std::vector<std::string> labels,
                                const std::vector<std::vector<std::string>>& opens);
  static FiniteSpace from_masks(std::vector<std::string> labels,
                                std::vector<std::uint32_t> masks);
  static FiniteSpace discrete(int n);
  // Alexandrov space of a reflexive-transitive relation: opens are the
  // up-closed sets, the minimal open around x is {y : x <= y}.
  template <class Leq>
  static FiniteSpace from_preorder(int n, Leq&& leq) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      bool up = true;
      for (int x = 0; x < n && up; ++x) {
        if (!(s & (1u << x))) continue;
        for (int y = 0; y < n && up; ++y)
          if (leq(x, y) && !(s & (1u << y))) up = false;
      }
      if (up) masks.push_back(s);
    }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return from_masks(std::move(labels), std::move(masks));
  }

  int size() const { return n_; }
  const std::string& label(int i) const { return labels_.at(static_cast<size_t>(i)); }
  int index_of(const std::string& label) const;
  const std::vector<std::uint32_t>& opens() const { return opens_; }

  double distance(int a, int b) const { return a == b ? 0.0 : 1.0; }
  std::string describe() const;

  SpaceValidation validate() const;
  std::uint32_t minimal_open(int x) const;
  Neighborhood neighborhood(int x, int level) const;
  HausdorffReport hausdorff() const;

  // Exact convergence relation: the net is residually inside every open
  // neighborhood of x. Works in any finite space, separated or not.
  bool converges_to(const Net<int>& s, int x) const;

  // Limit oracle; refuses non-Hausdorff spaces with a separation error.
  LimitOutcome<int> limit(const Net<int>& s, double tol = 0.0, int budget = 0) const;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> opens_;
};

std::vector<FiniteSpace> enumerate_topologies(int n);

// Unbounded real line with the absolute-value metric.
struct RealLine {
  using point = double;
  double distance(double a, double b) const { return std::abs(a - b); }
  std::string describe() const { return "line"; }
  Neighborhood neighborhood(double x, int level, double tol) const {
    Neighborhood nb;
    nb.center = x;
    nb.radius = tol * std::ldexp(1.0, -level);
    nb.description = "ball(" + std::to_string(x) + ", " + std::to_string(nb.radius) + ")";
    return nb;
  }
};

// R^n with the max-coordinate metric.
struct RnSpace {
  int dim = 1;
  using point = std::vector<double>;
  double distance(const point& a, const point& b) const {
    if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
      throw std::invalid_argument("dimension mismatch");
    double worst = 0.0;
    for (int i = 0; i < dim; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
  }
  std::string describe() const { return "r^n:" + std::to_string(dim); }
};

// Uniformly spaced carrier for [a, b]; doubles as the sampling grid for
// tabulated functions. Queries must hit grid points exactly, there is no
// interpolation anywhere downstream.
struct IntervalGrid {
  double a = 0.0;
  double b = 1.0;
  int resolution = 257;  // number of points, >= 3

  using point = double;

  double step() const { return (b - a) / (resolution - 1); }
  double point_at(int k) const;
  int index_of(double x) const;  // throws std::domain_error off-grid
  bool contains(double x) const;
  double snap(double x) const;  // nearest grid point, clamped
  double distance(double p, double q) const { return std::abs(p - q); }
  std::string describe() const;
};

template <class S>
HausdorffReport metric_hausdorff(const S&) {
  return {true, "metric"};
}

// Truncation detector for metric-style spaces. The candidate is the valuation
// at the canonical top of the index set; the residual is the smallest bound r
// such that some tail with at least two members stays within r of the
// candidate. Convergence is gated at level 0 (residual <= tol); a larger
// budget only deepens the reported refinement level, it never flips the
// verdict. A "no limit" verdict on a too-shallow truncation is possible and
// honest; a reported limit is always accompanied by the observed residual.
template <class S, class P = typename S::point>
LimitOutcome<P> detect_limit(const S& space, const Net<P>& net, double tol, int budget) {
  LimitOutcome<P> out;
  const DirectedSet& idx = *net.index;
  int n = idx.size();
  int top = idx.canonical_top();
  const P& cand = net.at(top);

  std::vector<double> dist(static_cast<size_t>(n));
  double spread = 0.0;
  for (int i = 0; i < n; ++i) {
    dist[static_cast<size_t>(i)] = space.distance(net.at(i), cand);
    spread = std::max(spread, dist[static_cast<size_t>(i)]);
  }
  out.spread = spread;

  double best = std::numeric_limits<double>::infinity();
  int best_anchor = -1;
  for (int e = 0; e < n; ++e) {
    std::vector<int> tl = idx.tail(e);
    if (static_cast<int>(tl.size()) < 2 && n > 1) continue;
    double worst = 0.0;
    for (int j : tl) worst = std::max(worst, dist[static_cast<size_t>(j)]);
    if (worst < best) {
      best = worst;
      best_anchor = e;
    }
  }
  if (best_anchor < 0) {  // singleton carrier
    best = 0.0;
    best_anchor = top;
  }

  out.value = cand;
  out.residual = best;
  out.anchor = best_anchor;
  out.anchor_label = idx.label(best_anchor);
  if (best <= tol) {
    out.converged = true;
    int level = 0;
    while (level < budget && best <= tol * std::ldexp(1.0, -(level + 1))) ++level;
    out.level = level;
  } else {
    out.reason = "tail spread " + std::to_string(best) + " exceeds tolerance " +
                 std::to_string(tol) + " at anchor " + out.anchor_label;
  }
  return out;
}

// Dispatch helper so checks can treat finite and metric spaces uniformly:
// finite spaces answer exactly, metric spaces run the truncation detector.
inline LimitOutcome<int> space_limit(const FiniteSpace& sp, const Net<int>& s,
                                     double /*tol*/, int /*budget*/) {
  return sp.limit(s);
}

template <class S, class P = typename S::point>
LimitOutcome<P> space_limit(const S& sp, const Net<P>& s, double tol, int budget) {
  return detect_limit(sp, s, tol, budget);
}

enum class NetMode { uniform, pointwise };

inline const char* mode_name(NetMode m) {
  return m == NetMode::uniform ? "uniform" : "pointwise";
}

// Distance between two nets over the same index set. Uniform mode takes the
// supremum of coordinate distances. Pointwise mode discounts the coordinate at
// canonical rank k by 2^-k, so late coordinates count for almost nothing: a
// net can settle pointwise while its deep coordinates are still moving, which
// is exactly the weakness that separates the two regimes on a finite carrier.
template <class S>
struct NetSpace {
  const S& base;
  NetMode mode;

  using point = Net<typename S::point>;

  double coordinate_weight(int rank) const {
    return mode == NetMode::uniform ? 1.0 : std::ldexp(1.0, -std::min(rank, 1000));
  }

  double distance(const point& x, const point& y) const {
    if (!x.index->same_as(*y.index))
      throw std::invalid_argument("net distance needs a common index set");
    double worst = 0.0;
    for (int i = 0; i < x.size(); ++i) {
      double d = base.distance(x.at(i), y.at(i)) * coordinate_weight(i);
      worst = std::max(worst, d);
    }
    return worst;
  }

  std::string describe() const {
    return std::string(mode_name(mode)) + " nets over " + base.describe();
  }
};

// Limit of a doubly indexed net, taken along the column index: the matrix is
// read as a net of column nets. On failure the worst coordinate is reported
// (unweighted), which is the natural witness for pointwise breakdowns.
template <class S, class P = typename S::point>
struct MatrixLimitResult {
  LimitOutcome<Net<P>> outcome;
  int worst_coordinate = -1;
  double worst_coordinate_spread = 0.0;
};

template <class S, class P = typename S::point>
MatrixLimitResult<S, P> matrix_limit(const S& base, NetMode mode, const NetMatrix<P>& m,
                                     double tol, int budget) {
  NetSpace<S> ns{base, mode};
  MatrixLimitResult<S, P> res;
  res.outcome = detect_limit(ns, m.as_net_of_columns(), tol, budget);

  int top_col = m.cols->canonical_top();
  double best_weighted = -1.0;
  for (int r = 0; r < m.rows->size(); ++r) {
    double sp = 0.0;
    for (int c = 0; c < m.cols->size(); ++c)
      sp = std::max(sp, base.distance(m.at(r, c), m.at(r, top_col)));
    double weighted = sp * ns.coordinate_weight(r);
    if (weighted > best_weighted) {
      best_weighted = weighted;
      res.worst_coordinate = r;
      res.worst_coordinate_spread = sp;
    }
  }
  return res;
}

}  // namespace netcalc
