#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "netcalc/space.hpp"

namespace netcalc {

// hypothesis_not_met marks instances whose preconditions already fail; such
// records never count against the claim under test. fail is reserved for a
// conclusion that is violated while the preconditions hold, or for a crafted
// instance that demonstrably breaks a non-universal property.
enum class Verdict { pass, fail, inconclusive, hypothesis_not_met };

const char* verdict_name(Verdict v);

struct CheckRecord {
  std::string check;
  std::string sample;
  Verdict verdict = Verdict::inconclusive;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::quiet_NaN();
  std::string witness;
  std::string note;
  // conclusion record of a theorem pipeline: a fail here, with hypotheses
  // already checked, is a soundness alarm rather than an expected outcome
  bool theorem = false;
};

// A net bundled with an optional externally certified limit. Detection always
// recomputes; the certificate is only ever used as the reference side of a
// comparison. Certifying a slowly decaying net is legitimate but will show
// the truncation drift honestly.
template <class P>
struct ConvergingNet {
  std::string id;
  Net<P> net;
  std::optional<P> certified;
};

// The subclass of nets the detector accepts at the given tolerance, together
// with the induced (partial) limit assignment.
template <class S>
struct PartialLimitAlgebra {
  S space;
  double tol = 1e-3;
  int budget = 8;

  using point = typename S::point;

  LimitOutcome<point> classify(const Net<point>& s) const {
    return space_limit(space, s, tol, budget);
  }
  bool member(const Net<point>& s) const { return classify(s).converged; }
};

enum class ArrowStatus { ok, undefined_value, image_not_accepted };

template <class P>
struct RestrictedImage {
  ArrowStatus status = ArrowStatus::ok;
  std::optional<Net<P>> net;  // engaged iff status == ok
  std::string detail;
};

// Arrow map restricted to the accepted subclass: the image must be defined
// entrywise and must itself be accepted by the target algebra.
template <class SB, class F, class PA>
RestrictedImage<typename SB::point> restricted_arrow(const PartialLimitAlgebra<SB>& target,
                                                     F&& f, const Net<PA>& s) {
  using PB = typename SB::point;
  RestrictedImage<PB> out;
  std::vector<PB> vals;
  vals.reserve(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) {
    auto r = f(s.at(i));
    if (!r) {
      out.status = ArrowStatus::undefined_value;
      out.detail = "undefined at index element " + s.index->label(i);
      return out;
    }
    vals.push_back(*r);
  }
  Net<PB> image(s.index, std::move(vals));
  auto cls = target.classify(image);
  if (!cls.converged) {
    out.status = ArrowStatus::image_not_accepted;
    out.detail = "image rejected: " + cls.reason;
    return out;
  }
  out.net = std::move(image);
  return out;
}

// Does the limit assignment commute with an arrow on the given samples?
// lhs is the detected limit of the image net; rhs is the arrow applied to the
// certified limit when present, to the detected source limit otherwise.
template <class SA, class SB, class F>
std::vector<CheckRecord> check_morphism(const PartialLimitAlgebra<SA>& source,
                                        const PartialLimitAlgebra<SB>& target, F&& f,
                                        const std::vector<ConvergingNet<typename SA::point>>& samples,
                                        double accept_tol, const std::string& arrow_name) {
  std::vector<CheckRecord> out;
  for (const auto& sample : samples) {
    CheckRecord rec;
    rec.check = "morphism:" + arrow_name;
    rec.sample = sample.id;
    auto src = source.classify(sample.net);
    if (!src.converged) {
      rec.verdict = Verdict::hypothesis_not_met;
      rec.note = "source net not accepted: " + src.reason;
      out.push_back(rec);
      continue;
    }
    auto image = map_net(f, sample.net);
    auto img = target.classify(image);
    auto ref = sample.certified ? *sample.certified : src.value;
    rec.rhs = f(ref);
    if (!img.converged) {
      rec.verdict = Verdict::fail;
      rec.residual = img.residual;
      rec.note = "image net not accepted: " + img.reason;
      out.push_back(rec);
      continue;
    }
    rec.lhs = img.value;
    rec.residual = std::abs(rec.lhs - rec.rhs);
    rec.verdict = rec.residual <= accept_tol ? Verdict::pass : Verdict::fail;
    if (rec.verdict == Verdict::fail && !sample.certified)
      rec.note = "computed-vs-computed disagreement";
    out.push_back(rec);
  }
  return out;
}

// Row r of a matrix is the net over the column index sitting at row r.
// The transposition property asks that every row have a limit and that the
// net of those row limits coincide with the matrix limit taken columnwise.
// It is not universal: a matrix can settle columnwise (especially in the
// weighted mode) while deep rows keep oscillating, and then the property
// fails with those rows as witnesses.
template <class P>
struct TranspositionReport {
  Verdict verdict = Verdict::inconclusive;
  LimitOutcome<Net<P>> matrix_lim;
  std::vector<int> divergent_rows;
  int worst_row = -1;
  double worst_row_spread = 0.0;
  double gap = std::numeric_limits<double>::quiet_NaN();
  std::string note;
};

template <class S, class P = typename S::point>
TranspositionReport<P> check_transposition(const PartialLimitAlgebra<S>& base, NetMode mode,
                                           const NetMatrix<P>& m, double accept_tol) {
  TranspositionReport<P> rep;
  auto ml = matrix_limit(base.space, mode, m, base.tol, base.budget);
  rep.matrix_lim = ml.outcome;
  if (!ml.outcome.converged) {
    rep.verdict = Verdict::hypothesis_not_met;
    rep.note = "matrix does not settle columnwise (" + std::string(mode_name(mode)) +
               "): " + ml.outcome.reason;
    return rep;
  }
  std::vector<P> row_limits;
  for (int r = 0; r < m.rows->size(); ++r) {
    auto rl = base.classify(m.row(r));
    if (!rl.converged) {
      rep.divergent_rows.push_back(r);
      if (rl.spread > rep.worst_row_spread) {
        rep.worst_row_spread = rl.spread;
        rep.worst_row = r;
      }
      continue;
    }
    row_limits.push_back(rl.value);
  }
  if (!rep.divergent_rows.empty()) {
    rep.verdict = Verdict::fail;
    rep.note = "rows without limits: " + std::to_string(rep.divergent_rows.size()) +
               ", worst row " + m.rows->label(rep.worst_row) + " spread " +
               std::to_string(rep.worst_row_spread);
    return rep;
  }
  Net<P> row_net(m.rows, std::move(row_limits));
  NetSpace<S> ns{base.space, mode};
  rep.gap = ns.distance(row_net, ml.outcome.value);
  rep.verdict = rep.gap <= accept_tol ? Verdict::pass : Verdict::fail;
  if (rep.verdict == Verdict::fail)
    rep.note = "net of row limits sits " + std::to_string(rep.gap) +
               " away from the matrix limit";
  return rep;
}

// Exchange of iterated limits: the outer limit of the columnwise matrix limit
// against the outer limit of the per-column limits. When deep columns stop
// having limits at this truncation, the best available surrogate is compared:
// the deepest row with a strict limit against the deepest column with one.
// A large surrogate gap is a genuine failure of the exchange; a small one
// proves nothing and stays inconclusive.
template <class P>
struct LimitExchangeReport {
  Verdict verdict = Verdict::inconclusive;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double gap = std::numeric_limits<double>::quiet_NaN();
  bool frontier = false;  // true when the surrogate comparison was used
  int frontier_row = -1, frontier_col = -1;
  std::string note;
};

template <class S, class P = typename S::point>
LimitExchangeReport<P> check_limit_exchange(const PartialLimitAlgebra<S>& base, NetMode mode,
                                            const NetMatrix<P>& m, double accept_tol,
                                            double fail_threshold) {
  LimitExchangeReport<P> rep;
  auto ml = matrix_limit(base.space, mode, m, base.tol, base.budget);
  if (!ml.outcome.converged) {
    rep.verdict = Verdict::hypothesis_not_met;
    rep.note = "matrix does not settle columnwise (" + std::string(mode_name(mode)) +
               "): " + ml.outcome.reason;
    return rep;
  }

  std::vector<P> col_limits;
  bool all_cols = true;
  for (int c = 0; c < m.cols->size(); ++c) {
    auto cl = base.classify(m.column(c));
    if (!cl.converged) {
      all_cols = false;
      break;
    }
    col_limits.push_back(cl.value);
  }
  auto outer = base.classify(ml.outcome.value);

  if (all_cols && outer.converged) {
    Net<P> col_net(m.cols, std::move(col_limits));
    auto right = base.classify(col_net);
    if (right.converged) {
      rep.lhs = outer.value;
      rep.rhs = right.value;
      rep.gap = std::abs(rep.lhs - rep.rhs);
      rep.verdict = rep.gap <= accept_tol ? Verdict::pass : Verdict::fail;
      if (rep.verdict == Verdict::fail)
        rep.note = "iterated limits disagree by " + std::to_string(rep.gap);
      return rep;
    }
    rep.verdict = Verdict::inconclusive;
    rep.note = "net of column limits has no detected limit: " + right.reason;
    return rep;
  }

  // surrogate comparison at the strictness frontier
  rep.frontier = true;
  std::optional<P> row_val, col_val;
  for (int r = 0; r < m.rows->size(); ++r) {
    auto rl = base.classify(m.row(r));
    if (rl.converged) {
      row_val = rl.value;
      rep.frontier_row = r;
    }
  }
  for (int c = 0; c < m.cols->size(); ++c) {
    auto cl = base.classify(m.column(c));
    if (cl.converged) {
      col_val = cl.value;
      rep.frontier_col = c;
    }
  }
  if (!row_val || !col_val) {
    rep.verdict = Verdict::inconclusive;
    rep.note = "no strict inner limits on one side at this truncation";
    return rep;
  }
  rep.lhs = *row_val;
  rep.rhs = *col_val;
  rep.gap = std::abs(rep.lhs - rep.rhs);
  if (rep.gap > fail_threshold) {
    rep.verdict = Verdict::fail;
    rep.note = "deepest row limit (row " + m.rows->label(rep.frontier_row) + ") and deepest column limit (column " +
               m.cols->label(rep.frontier_col) + ") disagree by " + std::to_string(rep.gap);
  } else {
    rep.verdict = Verdict::inconclusive;
    rep.note = "inner limits undetected past the frontier; observed agreement " +
               std::to_string(rep.gap);
  }
  return rep;
}

// Mapping a settled matrix through an arrow and settling again against
// settling first and mapping. Hypotheses: the matrix settles in the first
// mode, and the arrow commutes with limits on every strictly settled column
// (checked computed-vs-computed). Conclusion: the mapped matrix settles in
// the second mode onto the image of the original limit.
template <class P>
struct MappedLimitReport {
  Verdict verdict = Verdict::inconclusive;
  bool hypotheses_met = false;
  double gap = std::numeric_limits<double>::quiet_NaN();
  std::string note;
};

template <class S, class F, class P = typename S::point>
MappedLimitReport<P> check_mapped_limit(const PartialLimitAlgebra<S>& base, NetMode mode_src,
                                        NetMode mode_dst, F&& f, const NetMatrix<P>& m,
                                        double hyp_tol, double accept_tol) {
  MappedLimitReport<P> rep;
  auto t1 = matrix_limit(base.space, mode_src, m, base.tol, base.budget);
  if (!t1.outcome.converged) {
    rep.verdict = Verdict::hypothesis_not_met;
    rep.note = "matrix does not settle (" + std::string(mode_name(mode_src)) + ")";
    return rep;
  }
  for (int c = 0; c < m.cols->size(); ++c) {
    auto col = m.column(c);
    auto src = base.classify(col);
    if (!src.converged) continue;  // arrow condition only binds on settled columns
    auto img = base.classify(map_net(f, col));
    if (!img.converged || std::abs(img.value - f(src.value)) > hyp_tol) {
      rep.verdict = Verdict::hypothesis_not_met;
      rep.note = "arrow does not commute with the limit of column " + m.cols->label(c);
      return rep;
    }
  }
  rep.hypotheses_met = true;

  auto mapped = map_matrix(f, m);
  auto t2 = matrix_limit(base.space, mode_dst, mapped, base.tol, base.budget);
  if (!t2.outcome.converged) {
    rep.verdict = Verdict::fail;
    rep.note = "mapped matrix does not settle (" + std::string(mode_name(mode_dst)) +
               "): " + t2.outcome.reason;
    return rep;
  }
  NetSpace<S> ns{base.space, mode_dst};
  rep.gap = ns.distance(t2.outcome.value, map_net(f, t1.outcome.value));
  rep.verdict = rep.gap <= accept_tol ? Verdict::pass : Verdict::fail;
  if (rep.verdict == Verdict::fail)
    rep.note = "mapped limit misses the image of the limit by " + std::to_string(rep.gap);
  return rep;
}

// Deterministic sample batteries over a truncated natural index.
std::vector<ConvergingNet<double>> plateau_battery(int depth, int count, std::uint64_t seed);
ConvergingNet<double> plateau_sample(const std::string& id, int depth, double limit,
                                     double amplitude, int settle_at);
ConvergingNet<double> geometric_sample(const std::string& id, int depth, double limit,
                                       double amplitude, double ratio);
ConvergingNet<double> decay_sample(const std::string& id, int depth, double limit,
                                   double amplitude, bool certify);

}  // namespace netcalc
