#include "netcalc/funcspace.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace netcalc {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim_num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

double FunctionSpace::distance(const SampledFunction& f, const SampledFunction& g) const {
  if (f.grid.resolution != g.grid.resolution || f.grid.a != g.grid.a || f.grid.b != g.grid.b)
    throw std::invalid_argument("function distance needs a common grid");
  double worst = 0.0;
  for (int k = 0; k < f.grid.resolution; ++k)
    worst = std::max(worst, std::abs(f.at(k) - g.at(k)) * weight(k));
  return worst;
}

std::string FunctionSpace::describe() const {
  return "funcs-" + std::string(mode_name(mode)) + ":" + grid.describe();
}

FunctionFamily make_family(const std::string& spec, int depth, const IntervalGrid& g) {
  if (depth < 1) throw std::invalid_argument("family depth must be positive");
  auto parts = split(spec, ':');
  FunctionFamily fam;
  fam.traits.id = spec;
  std::vector<SampledFunction> members;
  members.reserve(static_cast<size_t>(depth));
  if (parts[0] == "square_plus_decay") {
    for (int n = 0; n < depth; ++n)
      members.push_back(SampledFunction::tabulate(
          "x^2+x/" + std::to_string(n + 1), g,
          [n](double x) { return x * x + x / (n + 1); }));
    fam.traits.sup_curvature = 2.0;
  } else if (parts[0] == "powers") {
    for (int n = 0; n < depth; ++n)
      members.push_back(SampledFunction::tabulate("x^" + std::to_string(n), g,
                                                  [n](double x) { return std::pow(x, n); }));
  } else if (parts[0] == "fast_waves") {
    for (int n = 0; n < depth; ++n) {
      double k = (n + 1.0) * (n + 1.0);
      members.push_back(SampledFunction::tabulate(
          "sin(" + trim_num(k) + "x)/" + std::to_string(n + 1), g,
          [k, n](double x) { return std::sin(k * x) / (n + 1); }));
    }
  } else if (parts[0] == "const" && parts.size() == 2) {
    double c = std::stod(parts[1]);
    for (int n = 0; n < depth; ++n)
      members.push_back(
          SampledFunction::tabulate("const " + parts[1], g, [c](double) { return c; }));
    fam.traits.sup_curvature = 0.0;
  } else {
    throw std::invalid_argument("unknown family spec '" + spec + "'");
  }
  fam.members = Net<SampledFunction>(DirectedSet::nat_trunc(depth), std::move(members));
  return fam;
}

std::vector<std::string> known_families() {
  return {"square_plus_decay", "powers", "fast_waves", "const:<c>"};
}

FunctionInfo make_function_info(const std::string& spec, const IntervalGrid& g) {
  auto parts = split(spec, ':');
  FunctionInfo info;
  info.traits.id = spec;
  if (parts[0] == "poly" && parts.size() == 2) {
    std::vector<double> coeff;
    for (const auto& c : split(parts[1], ',')) coeff.push_back(std::stod(c));
    if (coeff.empty()) throw std::invalid_argument("polynomial needs coefficients");
    info.fn = SampledFunction::tabulate("poly[" + parts[1] + "]", g, [&](double x) {
      double acc = 0.0;
      for (size_t i = coeff.size(); i-- > 0;) acc = acc * x + coeff[i];
      return acc;
    });
    if (coeff.size() <= 4) {
      double c2 = coeff.size() > 2 ? coeff[2] : 0.0;
      double c3 = coeff.size() > 3 ? coeff[3] : 0.0;
      info.traits.sup_curvature = std::abs(2.0 * c2) + 6.0 * std::abs(c3);
    }
  } else if (parts[0] == "kink") {
    info.fn = SampledFunction::tabulate("|x-1/2|", g,
                                        [](double x) { return std::abs(x - 0.5); });
    info.traits.kinked = true;
    info.traits.kink_at = 0.5;
  } else if (parts[0] == "sin" && parts.size() == 2) {
    double k = std::stod(parts[1]);
    info.fn = SampledFunction::tabulate("sin(" + parts[1] + "x)", g,
                                        [k](double x) { return std::sin(k * x); });
    info.traits.sup_curvature = k * k;
  } else if (parts[0] == "const" && parts.size() == 2) {
    double c = std::stod(parts[1]);
    info.fn = SampledFunction::tabulate("const " + parts[1], g, [c](double) { return c; });
    info.traits.sup_curvature = 0.0;
  } else {
    throw std::invalid_argument("unknown function spec '" + spec + "'");
  }
  return info;
}

SampledFunction make_function(const std::string& spec, const IntervalGrid& g) {
  return make_function_info(spec, g).fn;
}

std::vector<ConvergingNet<double>> grid_battery(const IntervalGrid& g, int depth, int count,
                                                std::uint64_t seed) {
  std::vector<ConvergingNet<double>> out;
  auto plateau_to = [&](const std::string& id, double target, double amp, int settle) {
    double t = g.snap(target);
    std::vector<double> vals;
    vals.reserve(static_cast<size_t>(depth));
    for (int n = 0; n < depth; ++n)
      vals.push_back(n < settle ? g.snap(t + amp / (n + 1)) : t);
    return ConvergingNet<double>{id, Net<double>(DirectedSet::nat_trunc(depth), vals), t};
  };
  struct Designed {
    double target, amp;
    int settle;
  };
  const Designed designed[] = {
      {0.0, 0.0, 0},        // constant at the left edge
      {1.0, 0.0, 0},        // constant at the right edge
      {0.5, 0.4, 24},       // from above
      {0.25, -0.2, 24},     // from below
      {0.984375, -0.5, 20}, // plateau just under 1, the stress point
      {1.0, -0.3, 28},      // climbing into the right edge
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> target_idx(0, g.resolution - 1);
  std::uniform_real_distribution<double> amp(0.2, 0.6);
  std::uniform_int_distribution<int> settle(depth / 4, depth / 2);
  std::uniform_int_distribution<int> updown(0, 1);
  for (int k = 0; k < count; ++k) {
    std::string id = "b" + std::to_string(k);
    if (k < 6) {
      out.push_back(plateau_to(id, designed[k].target, designed[k].amp, designed[k].settle));
    } else {
      double t = g.point_at(target_idx(rng));
      double a = amp(rng) * (updown(rng) ? 1.0 : -1.0);
      int s = settle(rng);
      out.push_back(plateau_to(id, t, a, s));
    }
  }
  return out;
}

LimitOutcome<SampledFunction> function_net_limit(const FunctionFamily& fam, NetMode mode,
                                                 double tol, int budget) {
  FunctionSpace fs{fam.members.at(0).grid, mode};
  return detect_limit(fs, fam.members, tol, budget);
}

int worst_grid_point(const FunctionFamily& fam, NetMode mode) {
  int depth = fam.members.size();
  const SampledFunction& last = fam.members.at(depth - 1);
  const SampledFunction& prev = fam.members.at(depth >= 2 ? depth - 2 : 0);
  FunctionSpace fs{last.grid, mode};
  int worst = 0;
  double best = -1.0;
  for (int k = 0; k < last.grid.resolution; ++k) {
    double d = std::abs(prev.at(k) - last.at(k)) * fs.weight(k);
    if (d > best) {
      best = d;
      worst = k;
    }
  }
  return worst;
}

std::vector<CheckRecord> check_pointwise_agreement(const FunctionFamily& fam, double detect_tol,
                                                   int budget, double accept_tol) {
  std::vector<CheckRecord> out;
  const IntervalGrid& g = fam.members.at(0).grid;
  auto fpw = function_net_limit(fam, NetMode::pointwise, detect_tol, budget);

  CheckRecord head;
  head.check = "pointwise-agreement:net-limit";
  head.sample = fam.traits.id;
  if (!fpw.converged) {
    head.verdict = Verdict::hypothesis_not_met;
    head.residual = fpw.residual;
    head.witness = "x=" + trim_num(g.point_at(worst_grid_point(fam, NetMode::pointwise)));
    head.note = "family has no discounted limit at this truncation";
    out.push_back(head);
    return out;
  }
  head.verdict = Verdict::pass;
  head.residual = fpw.residual;
  out.push_back(head);

  PartialLimitAlgebra<RealLine> salg{RealLine{}, detect_tol, budget};
  for (int k = 0; k < g.resolution && std::ldexp(1.0, -k) >= detect_tol; ++k) {
    double x = g.point_at(k);
    std::vector<double> vals;
    vals.reserve(static_cast<size_t>(fam.members.size()));
    for (int d = 0; d < fam.members.size(); ++d) vals.push_back(fam.members.at(d).at(k));
    auto po = salg.classify(Net<double>(fam.members.index, std::move(vals)));
    CheckRecord rec;
    rec.check = "pointwise-agreement:point";
    rec.sample = fam.traits.id + "@x=" + trim_num(x);
    rec.theorem = true;
    if (!po.converged) {
      rec.verdict = Verdict::fail;
      rec.residual = po.spread;
      rec.witness = "value net at x=" + trim_num(x) + " has no limit";
    } else {
      rec.lhs = po.value;
      rec.rhs = fpw.value.at(k);
      rec.residual = std::abs(rec.lhs - rec.rhs);
      rec.verdict = rec.residual <= accept_tol ? Verdict::pass : Verdict::fail;
    }
    out.push_back(rec);
  }
  return out;
}

std::vector<CheckRecord> check_main_theorem(const FunctionFamily& fam,
                                            const std::vector<ConvergingNet<double>>& battery,
                                            const MainTheoremConfig& cfg) {
  std::vector<CheckRecord> out;
  const IntervalGrid& g = fam.members.at(0).grid;
  int depth = fam.members.size();
  PartialLimitAlgebra<RealLine> salg{RealLine{}, cfg.detect_tol, cfg.budget};
  RealLine line;

  auto funi = function_net_limit(fam, NetMode::uniform, cfg.detect_tol, cfg.budget);
  auto fpw = function_net_limit(fam, NetMode::pointwise, cfg.detect_tol, cfg.budget);

  CheckRecord fh;
  fh.check = "main-theorem:function-net-limit";
  fh.sample = fam.traits.id;
  fh.residual = funi.residual;
  if (funi.converged) {
    fh.verdict = Verdict::pass;
    fh.note = "uniform limit reached, assembled from member " + funi.value.name;
  } else {
    fh.verdict = Verdict::hypothesis_not_met;
    fh.witness = "x=" + trim_num(g.point_at(worst_grid_point(fam, NetMode::uniform)));
    fh.note = fpw.converged
                  ? "no uniform limit; the discounted mode still settles (residual " +
                        trim_num(fpw.residual) + "), which is weaker than required"
                  : "no uniform limit and no discounted limit either";
  }
  out.push_back(fh);

  const SampledFunction* fstar = funi.converged ? &funi.value : nullptr;

  for (const auto& b : battery) {
    std::string sid = fam.traits.id + "/" + b.id;

    auto xout = salg.classify(b.net);
    CheckRecord sn;
    sn.check = "main-theorem:sample-net";
    sn.sample = sid;
    if (!xout.converged) {
      sn.verdict = Verdict::hypothesis_not_met;
      sn.note = "sample net not accepted: " + xout.reason;
      out.push_back(sn);
      continue;
    }
    sn.verdict = Verdict::pass;
    sn.residual = xout.residual;
    out.push_back(sn);
    double xstar = b.certified ? *b.certified : xout.value;

    std::vector<double> entries;
    entries.reserve(static_cast<size_t>(b.net.size()) * depth);
    for (int r = 0; r < b.net.size(); ++r)
      for (int c = 0; c < depth; ++c) entries.push_back(fam.members.at(c).ev(b.net.at(r)));
    NetMatrix<double> m(b.net.index, fam.members.index, std::move(entries));

    auto tr = check_transposition(salg, cfg.mode, m, cfg.accept_tol);
    CheckRecord trec;
    trec.check = std::string("main-theorem:transposition-") + mode_name(cfg.mode);
    trec.sample = sid;
    trec.verdict = tr.verdict;
    trec.residual = tr.divergent_rows.empty() ? tr.gap : tr.worst_row_spread;
    trec.note = tr.note;
    if (!tr.divergent_rows.empty())
      trec.witness = "row " + m.rows->label(tr.worst_row) + " (x=" +
                     trim_num(b.net.at(tr.worst_row)) + ")";
    out.push_back(trec);

    auto mlu = matrix_limit(line, NetMode::uniform, m, cfg.detect_tol, cfg.budget);
    auto mlp = matrix_limit(line, NetMode::pointwise, m, cfg.detect_tol, cfg.budget);
    CheckRecord dom;
    dom.check = "main-theorem:mode-dominance";
    dom.sample = sid;
    dom.lhs = mlp.outcome.residual;
    dom.rhs = mlu.outcome.residual;
    dom.residual = std::max(0.0, dom.lhs - dom.rhs);
    dom.verdict = dom.lhs <= dom.rhs + 1e-12 ? Verdict::pass : Verdict::fail;
    out.push_back(dom);

    auto ex = check_limit_exchange(salg, cfg.mode, m, cfg.accept_tol, cfg.fail_threshold);
    CheckRecord erec;
    erec.check = std::string("main-theorem:limit-exchange-") + mode_name(cfg.mode);
    erec.sample = sid;
    erec.verdict = ex.verdict;
    erec.lhs = ex.lhs;
    erec.rhs = ex.rhs;
    erec.residual = ex.gap;
    erec.note = ex.note;
    out.push_back(erec);

    bool hyps_ok = true;
    for (int d : {0, depth / 2, depth - 1}) {
      const SampledFunction& fd = fam.members.at(d);
      auto img = salg.classify(map_net([&](double x) { return fd.ev(x); }, b.net));
      CheckRecord ar;
      ar.check = "main-theorem:arrow-f" + std::to_string(d);
      ar.sample = sid;
      if (!img.converged) {
        ar.verdict = Verdict::fail;
        ar.residual = img.spread;
        ar.note = "image of the sample net has no limit";
      } else {
        ar.lhs = img.value;
        ar.rhs = fd.ev(xstar);
        ar.residual = std::abs(ar.lhs - ar.rhs);
        ar.verdict = ar.residual <= cfg.hyp_tol ? Verdict::pass : Verdict::fail;
      }
      hyps_ok = hyps_ok && ar.verdict == Verdict::pass;
      out.push_back(ar);
    }

    std::vector<double> vvals;
    vvals.reserve(static_cast<size_t>(depth));
    for (int d = 0; d < depth; ++d) vvals.push_back(fam.members.at(d).ev(xstar));
    Net<double> value_net(fam.members.index, std::move(vvals));
    auto vo = salg.classify(value_net);

    if (fstar) {
      CheckRecord ev;
      ev.check = "main-theorem:eval-commutes";
      ev.sample = sid;
      if (!vo.converged) {
        ev.verdict = Verdict::fail;
        ev.residual = vo.spread;
        ev.note = "value net at the sample limit has no limit";
      } else {
        ev.lhs = vo.value;
        ev.rhs = fstar->ev(xstar);
        ev.residual = std::abs(ev.lhs - ev.rhs);
        ev.verdict = ev.residual <= cfg.hyp_tol ? Verdict::pass : Verdict::fail;
      }
      hyps_ok = hyps_ok && ev.verdict == Verdict::pass;
      out.push_back(ev);
    }

    CheckRecord cc;
    cc.check = "main-theorem:conclusion";
    cc.sample = sid;
    cc.theorem = true;
    if (!fstar) {
      cc.verdict = Verdict::hypothesis_not_met;
      if (!vo.converged) {
        cc.residual = vo.spread;
        cc.witness = "value net at x*=" + trim_num(xstar) + " diverges, spread " +
                     trim_num(vo.spread);
        cc.note = "family has no uniform limit; the equation's right side does not even "
                  "exist at this sample";
      } else {
        cc.note = "family has no uniform limit; value net still settles at this sample";
      }
    } else if (!hyps_ok) {
      cc.verdict = Verdict::hypothesis_not_met;
      cc.note = "an arrow or evaluation hypothesis failed for this sample";
    } else {
      auto ml = cfg.mode == NetMode::uniform ? mlu : mlp;
      if (!ml.outcome.converged) {
        cc.verdict = Verdict::inconclusive;
        cc.note = "matrix does not settle in the requested mode";
      } else {
        auto outer = salg.classify(ml.outcome.value);
        if (!outer.converged) {
          cc.verdict = Verdict::inconclusive;
          cc.note = "outer limit of the matrix limit not detected";
        } else {
          cc.lhs = outer.value;
          cc.rhs = fstar->ev(xstar);
          cc.residual = std::abs(cc.lhs - cc.rhs);
          cc.verdict = cc.residual <= cfg.accept_tol ? Verdict::pass : Verdict::fail;
        }
      }
    }
    out.push_back(cc);
  }
  return out;
}

}  // namespace netcalc
