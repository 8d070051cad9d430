#include "netcalc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace netcalc {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

NetMatrix<double> geometric_matrix(int depth) {
  auto idx = DirectedSet::nat_trunc(depth);
  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(depth) * depth);
  for (int d = 0; d < depth; ++d)
    for (int c = 0; c < depth; ++c) entries.push_back(std::pow(d / (d + 1.0), c));
  return NetMatrix<double>(idx, idx, std::move(entries));
}

NetMatrix<double> plateau_matrix(int depth) {
  auto idx = DirectedSet::nat_trunc(depth);
  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(depth) * depth);
  for (int d = 0; d < depth; ++d)
    for (int c = 0; c < depth; ++c)
      entries.push_back((d >= 8 ? 1.0 : d / 8.0) * (c >= 6 ? 0.75 : 2.0 - c / 4.0));
  return NetMatrix<double>(idx, idx, std::move(entries));
}

NetMatrix<double> reciprocal_matrix(int depth) {
  auto idx = DirectedSet::nat_trunc(depth);
  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(depth) * depth);
  for (int d = 0; d < depth; ++d)
    for (int c = 0; c < depth; ++c) entries.push_back(1.0 / (d + c + 2.0));
  return NetMatrix<double>(idx, idx, std::move(entries));
}

PartialLimitAlgebra<RealLine> line_algebra(const ExperimentConfig& cfg) {
  return {RealLine{}, cfg.tol_detect, cfg.budget};
}

CheckRecord from_transposition(const std::string& check, const std::string& sample,
                               const TranspositionReport<double>& rep, bool theorem) {
  CheckRecord r;
  r.check = check;
  r.sample = sample;
  r.verdict = rep.verdict;
  r.theorem = theorem;
  r.note = rep.note;
  if (rep.divergent_rows.empty()) {
    r.residual = rep.gap;
  } else {
    r.residual = rep.worst_row_spread;
    r.witness = "row " + std::to_string(rep.worst_row);
  }
  return r;
}

CheckRecord from_exchange(const std::string& check, const std::string& sample,
                          const LimitExchangeReport<double>& rep, bool theorem) {
  CheckRecord r;
  r.check = check;
  r.sample = sample;
  r.verdict = rep.verdict;
  r.theorem = theorem;
  r.lhs = rep.lhs;
  r.rhs = rep.rhs;
  r.residual = rep.gap;
  r.note = rep.note;
  if (rep.frontier)
    r.witness = "frontier row " + std::to_string(rep.frontier_row) + ", col " +
                std::to_string(rep.frontier_col);
  return r;
}

// ---------------------------------------------------------------- functor laws

std::vector<CheckRecord> functor_laws_suite(const ExperimentConfig&) {
  std::vector<CheckRecord> out;
  // carrier {0,1,2}; a function is a base-3 code of its value table
  auto apply = [](int code, int v) { return (code / (v == 0 ? 1 : v == 1 ? 3 : 9)) % 3; };
  for (int n = 1; n <= 3; ++n) {
    auto sets = enumerate_directed(n);
    long identity_checked = 0, identity_bad = 0;
    long comp_checked = 0, comp_bad = 0;
    for (const auto& d : sets) {
      int sz = d->size();
      int nvals = 1;
      for (int i = 0; i < sz; ++i) nvals *= 3;
      for (int val = 0; val < nvals; ++val) {
        std::vector<int> vals;
        int v = val;
        for (int i = 0; i < sz; ++i, v /= 3) vals.push_back(v % 3);
        Net<int> s(d, vals);
        ++identity_checked;
        if (!same_valuation(map_net([](int x) { return x; }, s), s)) ++identity_bad;
        for (int f = 0; f < 27; ++f)
          for (int g = 0; g < 27; ++g) {
            auto composed = map_net([&](int x) { return apply(g, apply(f, x)); }, s);
            auto staged = map_net([&](int x) { return apply(g, x); },
                                  map_net([&](int x) { return apply(f, x); }, s));
            ++comp_checked;
            if (!same_valuation(composed, staged)) ++comp_bad;
          }
      }
    }
    CheckRecord id;
    id.check = "functor:identity";
    id.sample = "index-size-" + std::to_string(n);
    id.theorem = true;
    id.verdict = identity_bad == 0 ? Verdict::pass : Verdict::fail;
    id.residual = static_cast<double>(identity_bad);
    id.note = std::to_string(sets.size()) + " index sets, " + std::to_string(identity_checked) +
              " nets";
    out.push_back(id);
    CheckRecord co;
    co.check = "functor:composition";
    co.sample = "index-size-" + std::to_string(n);
    co.theorem = true;
    co.verdict = comp_bad == 0 ? Verdict::pass : Verdict::fail;
    co.residual = static_cast<double>(comp_bad);
    co.note = std::to_string(comp_checked) + " function pairs over all nets";
    out.push_back(co);
  }
  return out;
}

// ------------------------------------------------------------ finite spaces

std::vector<CheckRecord> finite_exhaustive_suite(const ExperimentConfig&) {
  std::vector<CheckRecord> out;
  const int expected_counts[] = {0, 1, 4, 29, 355};

  std::vector<std::vector<FiniteSpace>> topo(5);
  for (int n = 1; n <= 4; ++n) topo[static_cast<size_t>(n)] = enumerate_topologies(n);

  std::vector<DirectedSet::Ptr> small_indexes;
  for (int n = 1; n <= 3; ++n)
    for (auto& d : enumerate_directed(n)) small_indexes.push_back(d);

  for (int n = 1; n <= 4; ++n) {
    const auto& ts = topo[static_cast<size_t>(n)];
    CheckRecord cnt;
    cnt.check = "finite:topology-count";
    cnt.sample = "n=" + std::to_string(n);
    cnt.residual = std::abs(static_cast<double>(ts.size()) - expected_counts[n]);
    cnt.verdict = cnt.residual == 0.0 ? Verdict::pass : Verdict::fail;
    cnt.note = std::to_string(ts.size()) + " spaces";
    out.push_back(cnt);

    CheckRecord hd;
    hd.check = "finite:hausdorff-iff-discrete";
    hd.sample = "n=" + std::to_string(n);
    hd.theorem = true;
    hd.verdict = Verdict::pass;
    for (size_t i = 0; i < ts.size(); ++i) {
      bool h = ts[i].hausdorff().hausdorff;
      bool disc = ts[i].opens().size() == (1u << n);
      if (h != disc) {
        hd.verdict = Verdict::fail;
        hd.witness = "space #" + std::to_string(i);
        break;
      }
    }
    out.push_back(hd);

    CheckRecord uq;
    uq.check = "finite:limit-uniqueness";
    uq.sample = "n=" + std::to_string(n);
    uq.theorem = true;
    uq.verdict = Verdict::pass;
    long nets_checked = 0;
    for (const auto& t : ts) {
      if (!t.hausdorff().hausdorff) continue;
      for (const auto& d : small_indexes) {
        int sz = d->size();
        long nvals = 1;
        for (int i = 0; i < sz; ++i) nvals *= n;
        for (long val = 0; val < nvals && uq.verdict == Verdict::pass; ++val) {
          std::vector<int> vals;
          long v = val;
          for (int i = 0; i < sz; ++i, v /= n) vals.push_back(static_cast<int>(v % n));
          Net<int> s(d, vals);
          ++nets_checked;
          int limits = 0;
          for (int x = 0; x < n; ++x)
            if (t.converges_to(s, x)) ++limits;
          if (limits > 1) {
            uq.verdict = Verdict::fail;
            uq.witness = "net in " + t.describe();
          }
        }
      }
    }
    uq.note = std::to_string(nets_checked) + " nets in separated spaces";
    out.push_back(uq);

    if (n >= 2) {
      CheckRecord tw;
      tw.check = "finite:two-limit-witness";
      tw.sample = "n=" + std::to_string(n);
      tw.theorem = true;
      tw.verdict = Verdict::fail;
      tw.note = "no non-separated space admitted a two-limit net";
      for (size_t i = 0; i < ts.size() && tw.verdict == Verdict::fail; ++i) {
        const auto& t = ts[i];
        if (t.hausdorff().hausdorff) continue;
        for (int a = 0; a < n && tw.verdict == Verdict::fail; ++a)
          for (int b = a + 1; b < n && tw.verdict == Verdict::fail; ++b)
            for (int v = 0; v < n; ++v) {
              if ((t.minimal_open(a) & (1u << v)) && (t.minimal_open(b) & (1u << v))) {
                tw.verdict = Verdict::pass;
                tw.witness = "space #" + std::to_string(i) + ": constant " + t.label(v) +
                             " converges to both " + t.label(a) + " and " + t.label(b);
                tw.note.clear();
                break;
              }
            }
      }
      out.push_back(tw);
    }
  }

  // continuity vs specialization monotonicity, exhaustive through 4 points
  {
    CheckRecord ms;
    ms.check = "finite:morphism-structure";
    ms.sample = "all pairs through n=4";
    ms.theorem = true;
    ms.verdict = Verdict::pass;
    long combos = 0;
    for (int nx = 1; nx <= 4 && ms.verdict == Verdict::pass; ++nx) {
      for (int ny = 1; ny <= 4 && ms.verdict == Verdict::pass; ++ny) {
        long nfun = 1;
        for (int i = 0; i < nx; ++i) nfun *= ny;
        for (const auto& tx : topo[static_cast<size_t>(nx)]) {
          std::vector<std::uint32_t> xopens = tx.opens();
          std::uint32_t xmin[4];
          for (int p = 0; p < nx; ++p) xmin[p] = tx.minimal_open(p);
          for (const auto& ty : topo[static_cast<size_t>(ny)]) {
            std::uint32_t ymin[4];
            for (int p = 0; p < ny; ++p) ymin[p] = ty.minimal_open(p);
            for (long code = 0; code < nfun; ++code) {
              int f[4];
              long c = code;
              for (int p = 0; p < nx; ++p, c /= ny) f[p] = static_cast<int>(c % ny);
              bool cont = true;
              for (std::uint32_t v : ty.opens()) {
                std::uint32_t pre = 0;
                for (int p = 0; p < nx; ++p)
                  if (v & (1u << f[p])) pre |= 1u << p;
                if (!std::binary_search(xopens.begin(), xopens.end(), pre)) {
                  cont = false;
                  break;
                }
              }
              bool mono = true;
              for (int x = 0; x < nx && mono; ++x)
                for (int y = 0; y < nx; ++y)
                  if ((xmin[x] & (1u << y)) && !(ymin[f[x]] & (1u << f[y]))) {
                    mono = false;
                    break;
                  }
              ++combos;
              if (cont != mono) {
                ms.verdict = Verdict::fail;
                ms.witness = "nx=" + std::to_string(nx) + " ny=" + std::to_string(ny) +
                             " code=" + std::to_string(code);
                break;
              }
            }
            if (ms.verdict != Verdict::pass) break;
          }
          if (ms.verdict != Verdict::pass) break;
        }
      }
    }
    ms.note = std::to_string(combos) + " (space, space, function) combos";
    out.push_back(ms);
  }

  // continuity vs preservation of net convergence, through 3 points with
  // nets over index sets of one and two elements (constants included, which
  // already decide the finite case)
  {
    CheckRecord mn;
    mn.check = "finite:morphism-nets";
    mn.sample = "all pairs through n=3";
    mn.theorem = true;
    mn.verdict = Verdict::pass;
    std::vector<DirectedSet::Ptr> tiny;
    for (int n = 1; n <= 2; ++n)
      for (auto& d : enumerate_directed(n)) tiny.push_back(d);
    long combos = 0;
    for (int nx = 1; nx <= 3 && mn.verdict == Verdict::pass; ++nx) {
      for (int ny = 1; ny <= 3 && mn.verdict == Verdict::pass; ++ny) {
        long nfun = 1;
        for (int i = 0; i < nx; ++i) nfun *= ny;
        for (const auto& tx : topo[static_cast<size_t>(nx)]) {
          for (const auto& ty : topo[static_cast<size_t>(ny)]) {
            for (long code = 0; code < nfun; ++code) {
              int f[3];
              long c = code;
              for (int p = 0; p < nx; ++p, c /= ny) f[p] = static_cast<int>(c % ny);
              bool cont = true;
              for (std::uint32_t v : ty.opens()) {
                std::uint32_t pre = 0;
                for (int p = 0; p < nx; ++p)
                  if (v & (1u << f[p])) pre |= 1u << p;
                if (!std::binary_search(tx.opens().begin(), tx.opens().end(), pre)) {
                  cont = false;
                  break;
                }
              }
              bool preserves = true;
              for (const auto& d : tiny) {
                int sz = d->size();
                long nvals = 1;
                for (int i = 0; i < sz; ++i) nvals *= nx;
                for (long val = 0; val < nvals && preserves; ++val) {
                  std::vector<int> vals;
                  long vv = val;
                  for (int i = 0; i < sz; ++i, vv /= nx)
                    vals.push_back(static_cast<int>(vv % nx));
                  Net<int> s(d, vals);
                  auto mapped = map_net([&](int x) { return f[x]; }, s);
                  for (int x = 0; x < nx; ++x)
                    if (tx.converges_to(s, x) && !ty.converges_to(mapped, f[x])) {
                      preserves = false;
                      break;
                    }
                }
                if (!preserves) break;
              }
              ++combos;
              if (cont != preserves) {
                mn.verdict = Verdict::fail;
                mn.witness = "nx=" + std::to_string(nx) + " ny=" + std::to_string(ny) +
                             " code=" + std::to_string(code);
                break;
              }
            }
            if (mn.verdict != Verdict::pass) break;
          }
          if (mn.verdict != Verdict::pass) break;
        }
      }
    }
    mn.note = std::to_string(combos) + " combos against nets over tiny index sets";
    out.push_back(mn);
  }

  return out;
}

// ------------------------------------------------------------- matrix suites

std::vector<CheckRecord> transposition_suite(const ExperimentConfig& cfg) {
  std::vector<CheckRecord> out;
  auto alg = line_algebra(cfg);
  auto plateau = plateau_matrix(cfg.depth);
  auto geo = geometric_matrix(cfg.depth);

  out.push_back(from_transposition(
      "transposition:plateau(uniform)", "depth=" + std::to_string(cfg.depth),
      check_transposition(alg, NetMode::uniform, plateau, 1e-6), true));
  out.push_back(from_transposition(
      "transposition:plateau(pointwise)", "depth=" + std::to_string(cfg.depth),
      check_transposition(alg, NetMode::pointwise, plateau, 1e-6), true));
  out.push_back(from_transposition(
      "transposition:geometric(uniform)", "depth=" + std::to_string(cfg.depth),
      check_transposition(alg, NetMode::uniform, geo, 1e-6), true));

  auto inner = check_transposition(alg, NetMode::pointwise, geo, 1e-6);
  CheckRecord ef;
  ef.check = "expect-fail:transposition:geometric(pointwise)";
  ef.sample = "depth=" + std::to_string(cfg.depth);
  ef.theorem = true;
  ef.residual = inner.worst_row_spread;
  bool broke = inner.verdict == Verdict::fail && inner.worst_row_spread >= 0.5;
  ef.verdict = broke ? Verdict::pass : Verdict::fail;
  ef.witness = "row " + std::to_string(inner.worst_row);
  ef.note = std::to_string(inner.divergent_rows.size()) +
            " rows without limits while the matrix itself settles";
  out.push_back(ef);
  return out;
}

std::vector<CheckRecord> lim_continuity_suite(const ExperimentConfig& cfg) {
  std::vector<CheckRecord> out;
  auto alg = line_algebra(cfg);
  std::string sample = "depth=" + std::to_string(cfg.depth);
  auto plateau = plateau_matrix(cfg.depth);
  auto geo = geometric_matrix(cfg.depth);
  auto rec = reciprocal_matrix(cfg.depth);

  out.push_back(from_exchange("lim-continuity:plateau(uniform)", sample,
                              check_limit_exchange(alg, NetMode::uniform, plateau, 1e-6, 0.5),
                              true));
  out.push_back(from_exchange("lim-continuity:plateau(pointwise)", sample,
                              check_limit_exchange(alg, NetMode::pointwise, plateau, 1e-6, 0.5),
                              true));
  out.push_back(from_exchange("lim-continuity:reciprocal(uniform)", sample,
                              check_limit_exchange(alg, NetMode::uniform, rec, 1e-6, 0.5),
                              true));
  out.push_back(from_exchange("lim-continuity:geometric(uniform)", sample,
                              check_limit_exchange(alg, NetMode::uniform, geo, 1e-6, 0.5),
                              true));

  auto inner = check_limit_exchange(alg, NetMode::pointwise, geo, 1e-6, 0.5);
  CheckRecord ef;
  ef.check = "expect-fail:lim-continuity:geometric(pointwise)";
  ef.sample = sample;
  ef.theorem = true;
  ef.lhs = inner.lhs;
  ef.rhs = inner.rhs;
  ef.residual = inner.gap;
  bool broke = inner.verdict == Verdict::fail && inner.gap >= 0.5;
  ef.verdict = broke ? Verdict::pass : Verdict::fail;
  if (inner.frontier)
    ef.witness = "frontier row " + std::to_string(inner.frontier_row) + ", col " +
                 std::to_string(inner.frontier_col);
  ef.note = "the two iterated limits visibly disagree past the frontier";
  out.push_back(ef);
  return out;
}

// ----------------------------------------------------------- function suites

std::vector<CheckRecord> main_theorem_suite(const ExperimentConfig& cfg) {
  std::vector<CheckRecord> out;
  IntervalGrid g{0.0, 1.0, cfg.grid};
  auto battery = grid_battery(g, cfg.depth, 8, cfg.seed);
  MainTheoremConfig mtc;
  mtc.mode = NetMode::uniform;
  mtc.detect_tol = cfg.tol_detect;
  mtc.budget = cfg.budget;
  mtc.hyp_tol = cfg.tol_detect;

  for (const char* spec : {"square_plus_decay", "powers"}) {
    auto fam = make_family(spec, cfg.depth, g);
    auto recs = check_main_theorem(fam, battery, mtc);
    out.insert(out.end(), recs.begin(), recs.end());
    auto agree = check_pointwise_agreement(fam, cfg.tol_detect, cfg.budget, 1e-9);
    out.insert(out.end(), agree.begin(), agree.end());
  }
  auto waves = check_pointwise_agreement(make_family("fast_waves", cfg.depth, g),
                                         cfg.tol_detect, cfg.budget, 1e-9);
  out.insert(out.end(), waves.begin(), waves.end());
  return out;
}

std::vector<CheckRecord> diff_theorem_suite(const ExperimentConfig& cfg) {
  std::vector<CheckRecord> out;
  IntervalGrid g{0.0, 1.0, cfg.grid};
  DiffTheoremConfig dtc;
  dtc.detect_tol = cfg.tol_detect;
  dtc.diff_tol = cfg.tol_diff;
  dtc.budget = cfg.budget;

  for (const char* spec : {"square_plus_decay", "fast_waves"}) {
    auto recs = check_diff_theorem(make_family(spec, cfg.depth, g), dtc);
    out.insert(out.end(), recs.begin(), recs.end());
  }

  auto corner = differentiate(make_function("kink", g), 0.5, cfg.tol_diff, cfg.budget);
  CheckRecord kc;
  kc.check = "diff-theorem:corner-no-slope";
  kc.sample = "kink@x=0.5";
  kc.theorem = true;
  kc.residual = corner.limit.spread;
  kc.verdict = (!corner.limit.converged && corner.limit.spread == 2.0) ? Verdict::pass
                                                                       : Verdict::fail;
  kc.note = "one-sided slopes disagree by two full units";
  out.push_back(kc);

  const char* specs[] = {"poly:1,-2,3", "poly:0.5,1,-1,0.25"};
  double coeffs[][4] = {{1, -2, 3, 0}, {0.5, 1, -1, 0.25}};
  for (int i = 0; i < 2; ++i) {
    auto info = make_function_info(specs[i], g);
    double worst = 0.0;
    bool all_found = true;
    for (double a : {0.25, 0.5, 0.75}) {
      auto d = differentiate(info.fn, a, cfg.tol_diff, cfg.budget);
      if (!d.limit.converged) all_found = false;
      double exact = coeffs[i][1] + 2.0 * coeffs[i][2] * a + 3.0 * coeffs[i][3] * a * a;
      worst = std::max(worst, std::abs(d.limit.value - exact));
    }
    CheckRecord pr;
    pr.check = "diff-theorem:poly-slope";
    pr.sample = specs[i];
    pr.residual = worst;
    pr.verdict = (all_found && worst <= info.traits.sup_curvature * g.step())
                     ? Verdict::pass
                     : Verdict::fail;
    pr.note = "worst gap to the closed-form slope across three anchors";
    out.push_back(pr);
  }
  return out;
}

std::vector<CheckRecord> counterexamples_suite(const ExperimentConfig& cfg) {
  std::vector<CheckRecord> out;
  auto alg = line_algebra(cfg);
  IntervalGrid g{0.0, 1.0, cfg.grid};
  std::string depth_sample = "depth=" + std::to_string(cfg.depth);

  {
    auto inner = check_transposition(alg, NetMode::pointwise, geometric_matrix(cfg.depth), 1e-6);
    CheckRecord r;
    r.check = "expect-fail:transposition:geometric(pointwise)";
    r.sample = depth_sample;
    r.theorem = true;
    r.residual = inner.worst_row_spread;
    r.verdict = (inner.verdict == Verdict::fail && inner.worst_row_spread >= 0.5)
                    ? Verdict::pass
                    : Verdict::fail;
    r.witness = "row " + std::to_string(inner.worst_row);
    r.note = "rows without limits under the discounted metric";
    out.push_back(r);
  }
  {
    auto inner =
        check_limit_exchange(alg, NetMode::pointwise, geometric_matrix(cfg.depth), 1e-6, 0.5);
    CheckRecord r;
    r.check = "expect-fail:lim-continuity:geometric(pointwise)";
    r.sample = depth_sample;
    r.theorem = true;
    r.lhs = inner.lhs;
    r.rhs = inner.rhs;
    r.residual = inner.gap;
    r.verdict =
        (inner.verdict == Verdict::fail && inner.gap >= 0.5) ? Verdict::pass : Verdict::fail;
    r.note = "iterated limits disagree past the frontier";
    out.push_back(r);
  }
  {
    auto fam = make_family("powers", cfg.depth, g);
    double xstar = g.snap(0.984375);
    std::vector<double> vals;
    for (int d = 0; d < fam.members.size(); ++d) vals.push_back(fam.members.at(d).ev(xstar));
    auto o = alg.classify(Net<double>(fam.members.index, std::move(vals)));
    CheckRecord r;
    r.check = "expect-fail:main-theorem:powers-near-one";
    r.sample = "x=" + num(xstar);
    r.theorem = true;
    r.residual = o.spread;
    r.verdict = (!o.converged && o.spread >= 0.5) ? Verdict::pass : Verdict::fail;
    r.note = "value net of the powers family drops from 1 toward 0 here";
    out.push_back(r);
  }
  {
    auto fam = make_family("fast_waves", cfg.depth, g);
    std::vector<double> slopes;
    for (int n = 0; n < fam.members.size(); ++n)
      slopes.push_back(grid_derivative(fam.members.at(n)).ev(0.5));
    auto o = alg.classify(Net<double>(fam.members.index, std::move(slopes)));
    CheckRecord r;
    r.check = "expect-fail:diff-theorem:fast-waves";
    r.sample = "x=0.5";
    r.theorem = true;
    r.residual = o.residual;
    r.verdict = (!o.converged && o.residual >= 1.0) ? Verdict::pass : Verdict::fail;
    r.note = "memberwise slopes oscillate with unbounded amplitude";
    out.push_back(r);
  }
  {
    auto corner = differentiate(make_function("kink", g), 0.5, cfg.tol_diff, cfg.budget);
    CheckRecord r;
    r.check = "expect-fail:diff-theorem:corner";
    r.sample = "kink@x=0.5";
    r.theorem = true;
    r.residual = corner.limit.spread;
    r.verdict = (!corner.limit.converged && corner.limit.spread == 2.0) ? Verdict::pass
                                                                        : Verdict::fail;
    r.note = "signed quotients alternate between the two one-sided slopes";
    out.push_back(r);
  }
  {
    auto cyc = DirectedSet::finite_by_index({"a", "b"}, {{0, 1}, {1, 0}});
    auto o = FiniteSpace::discrete(2).limit(Net<int>(cyc, {0, 1}));
    CheckRecord r;
    r.check = "expect-fail:finite:two-top-cycle";
    r.sample = "two equivalent tops";
    r.theorem = true;
    r.residual = o.converged ? 0.0 : 1.0;
    r.verdict = !o.converged ? Verdict::pass : Verdict::fail;
    r.note = "a net whose top class carries two different values has no limit";
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"functor-laws",  "finite-exhaustive", "transposition", "lim-continuity",
          "main-theorem",  "diff-theorem",      "counterexamples"};
}

SuiteAggregate aggregate_records(const std::vector<CheckRecord>& records) {
  SuiteAggregate agg;
  for (const auto& r : records) {
    switch (r.verdict) {
      case Verdict::pass: ++agg.passed; break;
      case Verdict::fail: ++agg.failed; break;
      case Verdict::inconclusive: ++agg.inconclusive; break;
      case Verdict::hypothesis_not_met: ++agg.hypothesis_not_met; break;
    }
  }
  agg.overall = agg.failed > 0 ? Verdict::fail
              : agg.inconclusive > 0 ? Verdict::inconclusive
                                     : Verdict::pass;
  return agg;
}

ExperimentReport run_suite(const ExperimentConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.config = cfg;
  if (cfg.suite == "functor-laws") rep.records = functor_laws_suite(cfg);
  else if (cfg.suite == "finite-exhaustive") rep.records = finite_exhaustive_suite(cfg);
  else if (cfg.suite == "transposition") rep.records = transposition_suite(cfg);
  else if (cfg.suite == "lim-continuity") rep.records = lim_continuity_suite(cfg);
  else if (cfg.suite == "main-theorem") rep.records = main_theorem_suite(cfg);
  else if (cfg.suite == "diff-theorem") rep.records = diff_theorem_suite(cfg);
  else if (cfg.suite == "counterexamples") rep.records = counterexamples_suite(cfg);
  else throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
  rep.aggregate = aggregate_records(rep.records);
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
  return rep;
}

int suite_exit_code(const ExperimentReport& rep) {
  if (rep.aggregate.failed > 0) return 1;
  if (rep.aggregate.inconclusive > 0) return 2;
  return 0;
}

std::string report_to_json(const ExperimentReport& rep) {
  nlohmann::json j;
  j["config"] = {{"budget", rep.config.budget},   {"depth", rep.config.depth},
                 {"grid", rep.config.grid},       {"seed", rep.config.seed},
                 {"suite", rep.config.suite},     {"tol_detect", rep.config.tol_detect},
                 {"tol_diff", rep.config.tol_diff}, {"tol_struct", rep.config.tol_struct}};
  j["aggregate"] = {{"passed", rep.aggregate.passed},
                    {"failed", rep.aggregate.failed},
                    {"inconclusive", rep.aggregate.inconclusive},
                    {"hypothesis_not_met", rep.aggregate.hypothesis_not_met},
                    {"overall", verdict_name(rep.aggregate.overall)}};
  j["records"] = nlohmann::json::array();
  for (const auto& r : rep.records) {
    nlohmann::json rj;
    rj["check"] = r.check;
    rj["sample"] = r.sample;
    rj["verdict"] = verdict_name(r.verdict);
    rj["theorem"] = r.theorem;
    rj["lhs"] = r.lhs;
    rj["rhs"] = r.rhs;
    rj["residual"] = r.residual;
    if (!r.witness.empty()) rj["witness"] = r.witness;
    if (!r.note.empty()) rj["note"] = r.note;
    j["records"].push_back(std::move(rj));
  }
  j["wall_ms"] = rep.wall_ms;
  return j.dump(2) + "\n";
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}
}  // namespace

std::string report_to_csv(const ExperimentReport& rep) {
  std::ostringstream os;
  os << "suite,check,sample,verdict,residual\n";
  for (const auto& r : rep.records) {
    os << csv_field(rep.config.suite) << ',' << csv_field(r.check) << ','
       << csv_field(r.sample) << ',' << verdict_name(r.verdict) << ',';
    if (std::isfinite(r.residual)) os << r.residual;
    os << '\n';
  }
  return os.str();
}

FiniteSpace space_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("not valid JSON");
  if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
    throw std::invalid_argument("expected an object with 'points' and 'opens'");
  std::vector<std::string> labels;
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw std::invalid_argument("'points' must be strings");
    labels.push_back(p.get<std::string>());
  }
  std::vector<std::vector<std::string>> opens;
  for (const auto& open : j["opens"]) {
    if (!open.is_array()) throw std::invalid_argument("'opens' must be arrays of point names");
    std::vector<std::string> members;
    for (const auto& m : open) {
      if (!m.is_string()) throw std::invalid_argument("'opens' must be arrays of point names");
      members.push_back(m.get<std::string>());
    }
    opens.push_back(std::move(members));
  }
  return FiniteSpace::from_opens(std::move(labels), opens);
}

}  // namespace netcalc
