#include "netcalc/algebra.hpp"

#include <random>

namespace netcalc {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::hypothesis_not_met: return "hypothesis_not_met";
  }
  return "?";
}

ConvergingNet<double> plateau_sample(const std::string& id, int depth, double limit,
                                     double amplitude, int settle_at) {
  std::vector<double> vals;
  vals.reserve(static_cast<size_t>(depth));
  for (int n = 0; n < depth; ++n)
    vals.push_back(n < settle_at ? limit + amplitude / (n + 1) : limit);
  return {id, Net<double>(DirectedSet::nat_trunc(depth), std::move(vals)), limit};
}

ConvergingNet<double> geometric_sample(const std::string& id, int depth, double limit,
                                       double amplitude, double ratio) {
  std::vector<double> vals;
  vals.reserve(static_cast<size_t>(depth));
  double term = amplitude;
  for (int n = 0; n < depth; ++n) {
    vals.push_back(limit + term);
    term *= ratio;
  }
  return {id, Net<double>(DirectedSet::nat_trunc(depth), std::move(vals)), limit};
}

ConvergingNet<double> decay_sample(const std::string& id, int depth, double limit,
                                   double amplitude, bool certify) {
  std::vector<double> vals;
  vals.reserve(static_cast<size_t>(depth));
  for (int n = 0; n < depth; ++n) vals.push_back(limit + amplitude / (n + 1));
  ConvergingNet<double> s{id, Net<double>(DirectedSet::nat_trunc(depth), std::move(vals)), {}};
  if (certify) s.certified = limit;
  return s;
}

std::vector<ConvergingNet<double>> plateau_battery(int depth, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lim(-2.0, 2.0);
  std::uniform_real_distribution<double> amp(0.5, 1.5);
  std::uniform_real_distribution<double> ratio(0.3, 0.85);
  std::uniform_int_distribution<int> settle(depth / 4, depth / 2);
  std::vector<ConvergingNet<double>> out;
  for (int k = 0; k < count; ++k) {
    std::string id = "s" + std::string(k < 10 ? "0" : "") + std::to_string(k);
    double l = lim(rng);
    double a = amp(rng);
    switch (k % 3) {
      case 0:
        out.push_back(plateau_sample(id, depth, l, a, settle(rng)));
        break;
      case 1:
        out.push_back(geometric_sample(id, depth, l, a, ratio(rng)));
        break;
      default:
        out.push_back(plateau_sample(id, depth, l, 0.0, 0));
        break;
    }
  }
  return out;
}

}  // namespace netcalc
