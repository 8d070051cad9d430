#include "netcalc/calculus.hpp"

#include <cmath>
#include <sstream>

namespace netcalc {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

double difference_quotient(const SampledFunction& f, double x, double h) {
  if (h == 0.0) throw std::domain_error("zero increment");
  return (f.ev(x + h) - f.ev(x)) / h;
}

SampledFunction grid_derivative(const SampledFunction& f) {
  const IntervalGrid& g = f.grid;
  SampledFunction d;
  d.grid = IntervalGrid{g.a, g.b - g.step(), g.resolution - 1};
  d.name = "D[" + f.name + "]";
  d.values.reserve(static_cast<size_t>(g.resolution - 1));
  for (int k = 0; k + 1 < g.resolution; ++k)
    d.values.push_back((f.at(k + 1) - f.at(k)) / g.step());
  return d;
}

Net<double> quotient_net(const SampledFunction& f, double x) {
  std::vector<double> vals;
  vals.reserve(7);
  for (int k = 0; k < 7; ++k) {
    double h = std::ldexp(1.0, -(k + 2)) * (k % 2 == 0 ? 1.0 : -1.0);
    vals.push_back(difference_quotient(f, x, h));
  }
  return Net<double>(DirectedSet::nat_trunc(7), std::move(vals));
}

DerivativeOutcome differentiate(const SampledFunction& f, double x, double diff_tol,
                                int budget) {
  DerivativeOutcome out{LimitOutcome<double>{}, quotient_net(f, x),
                        std::max(diff_tol, 16.0 * f.grid.step())};
  out.limit = detect_limit(RealLine{}, out.quotients, out.accept_tol, budget);
  return out;
}

NetMatrix<double> quotient_matrix(const FunctionFamily& fam, double x) {
  auto rows = DirectedSet::nat_trunc(7);
  std::vector<double> entries;
  entries.reserve(7 * static_cast<size_t>(fam.members.size()));
  for (int k = 0; k < 7; ++k) {
    double h = std::ldexp(1.0, -(k + 2)) * (k % 2 == 0 ? 1.0 : -1.0);
    for (int c = 0; c < fam.members.size(); ++c)
      entries.push_back(difference_quotient(fam.members.at(c), x, h));
  }
  return NetMatrix<double>(rows, fam.members.index, std::move(entries));
}

std::vector<CheckRecord> check_diff_theorem(const FunctionFamily& fam,
                                            const DiffTheoremConfig& cfg) {
  std::vector<CheckRecord> out;
  const IntervalGrid& g = fam.members.at(0).grid;
  for (double a : cfg.anchors)
    if (a - 0.125 < g.a || a + 0.25 > g.b)
      throw std::invalid_argument("anchor " + num(a) +
                                  " leaves no room for the coarsest increment");

  auto funi = function_net_limit(fam, NetMode::uniform, cfg.detect_tol, cfg.budget);
  CheckRecord fh;
  fh.check = "diff-theorem:function-net";
  fh.sample = fam.traits.id;
  fh.residual = funi.residual;
  fh.verdict = funi.converged ? Verdict::pass : Verdict::hypothesis_not_met;
  if (!funi.converged) fh.note = "family has no uniform limit: " + funi.reason;
  out.push_back(fh);

  FunctionFamily deriv;
  deriv.traits.id = "D[" + fam.traits.id + "]";
  {
    std::vector<SampledFunction> ds;
    ds.reserve(static_cast<size_t>(fam.members.size()));
    for (int n = 0; n < fam.members.size(); ++n)
      ds.push_back(grid_derivative(fam.members.at(n)));
    deriv.members = Net<SampledFunction>(fam.members.index, std::move(ds));
  }
  auto duni = function_net_limit(deriv, NetMode::uniform, cfg.detect_tol, cfg.budget);
  CheckRecord dh;
  dh.check = "diff-theorem:derivative-net";
  dh.sample = fam.traits.id;
  dh.residual = duni.residual;
  dh.verdict = duni.converged ? Verdict::pass : Verdict::hypothesis_not_met;
  if (!duni.converged)
    dh.note = "forward-difference family has no uniform limit: " + duni.reason;
  out.push_back(dh);

  PartialLimitAlgebra<RealLine> salg{RealLine{}, cfg.detect_tol, cfg.budget};
  PartialLimitAlgebra<RealLine> qalg{RealLine{},
                                     std::max(cfg.diff_tol, 16.0 * g.step()), cfg.budget};

  for (double a : cfg.anchors) {
    std::string sid = fam.traits.id + "@x=" + num(a);

    std::vector<double> slopes;
    slopes.reserve(static_cast<size_t>(deriv.members.size()));
    for (int n = 0; n < deriv.members.size(); ++n)
      slopes.push_back(deriv.members.at(n).ev(a));
    Net<double> slope_net(deriv.members.index, std::move(slopes));
    auto so = salg.classify(slope_net);
    CheckRecord pw;
    pw.check = "diff-theorem:pointwise-derivative";
    pw.sample = sid;
    pw.residual = so.residual;
    if (so.converged) {
      pw.verdict = Verdict::pass;
    } else {
      pw.verdict = Verdict::hypothesis_not_met;
      pw.witness = "slope net tail stays " + num(so.residual) + " wide";
      pw.note = "memberwise slopes at this anchor have no limit";
    }
    out.push_back(pw);

    auto ex = check_limit_exchange(qalg, NetMode::uniform, quotient_matrix(fam, a),
                                   cfg.diff_tol, cfg.fail_threshold);
    CheckRecord er;
    er.check = "diff-theorem:exchange";
    er.sample = sid;
    er.verdict = ex.verdict;
    er.lhs = ex.lhs;
    er.rhs = ex.rhs;
    er.residual = ex.gap;
    er.note = ex.note;
    out.push_back(er);

    CheckRecord cc;
    cc.check = "diff-theorem:conclusion";
    cc.sample = sid;
    cc.theorem = true;
    if (!funi.converged || !duni.converged || !so.converged) {
      cc.verdict = Verdict::hypothesis_not_met;
      if (!so.converged) {
        cc.residual = so.residual;
        cc.witness = "slope net at x=" + num(a) + " diverges, tail width " + num(so.residual);
      }
      cc.note = "a settling hypothesis failed, the two sides need not agree";
    } else {
      auto d = differentiate(funi.value, a, cfg.diff_tol, cfg.budget);
      if (!d.limit.converged) {
        cc.verdict = Verdict::inconclusive;
        cc.note = "quotient net of the limit function does not settle";
        cc.residual = d.limit.residual;
      } else {
        cc.lhs = d.limit.value;
        cc.rhs = so.value;
        cc.residual = std::abs(cc.lhs - cc.rhs);
        cc.verdict = cc.residual <= cfg.diff_tol ? Verdict::pass : Verdict::fail;
        if (cc.verdict == Verdict::fail)
          cc.note = "slope of the limit misses the limit of the slopes";
      }
    }
    out.push_back(cc);
  }
  return out;
}

}  // namespace netcalc
