#include "netcalc/space.hpp"

#include <cmath>
#include <cstdio>

namespace netcalc {

namespace {

std::string set_to_string(const FiniteSpace& sp, std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < sp.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    if (!first) out += ",";
    out += sp.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

FiniteSpace FiniteSpace::from_masks(std::vector<std::string> labels,
                                    std::vector<std::uint32_t> masks) {
  if (labels.empty()) throw std::invalid_argument("finite space needs at least one point");
  if (labels.size() > 20) throw std::invalid_argument("finite space limited to 20 points");
  FiniteSpace sp;
  sp.n_ = static_cast<int>(labels.size());
  sp.labels_ = std::move(labels);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  sp.opens_ = std::move(masks);
  return sp;
}

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> labels,
                                    const std::vector<std::vector<std::string>>& opens) {
  FiniteSpace tmp;
  tmp.n_ = static_cast<int>(labels.size());
  tmp.labels_ = labels;
  std::vector<std::uint32_t> masks;
  for (const auto& open : opens) {
    std::uint32_t m = 0;
    for (const auto& name : open) {
      auto it = std::find(labels.begin(), labels.end(), name);
      if (it == labels.end())
        throw std::invalid_argument("open set mentions unknown point " + name);
      m |= 1u << (it - labels.begin());
    }
    masks.push_back(m);
  }
  return from_masks(std::move(labels), std::move(masks));
}

FiniteSpace FiniteSpace::discrete(int n) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s < (1u << n); ++s) masks.push_back(s);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return from_masks(std::move(labels), std::move(masks));
}

int FiniteSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("unknown point " + label);
  return static_cast<int>(it - labels_.begin());
}

std::string FiniteSpace::describe() const {
  return "finite:" + std::to_string(n_) + "pt:" + std::to_string(opens_.size()) + "open";
}

SpaceValidation FiniteSpace::validate() const {
  SpaceValidation v;
  std::uint32_t full = (n_ == 32) ? ~0u : ((1u << n_) - 1u);
  auto has = [&](std::uint32_t m) {
    return std::binary_search(opens_.begin(), opens_.end(), m);
  };
  if (!has(0)) {
    v.ok = false;
    v.problems.push_back({"empty set is not open"});
  }
  if (!has(full)) {
    v.ok = false;
    v.problems.push_back({"whole carrier is not open"});
  }
  for (size_t i = 0; i < opens_.size(); ++i)
    for (size_t j = i + 1; j < opens_.size(); ++j) {
      std::uint32_t a = opens_[i], b = opens_[j];
      if (!has(a | b)) {
        v.ok = false;
        v.problems.push_back({"union of " + set_to_string(*this, a) + " and " +
                              set_to_string(*this, b) + " is not open"});
      }
      if (!has(a & b)) {
        v.ok = false;
        v.problems.push_back({"intersection of " + set_to_string(*this, a) + " and " +
                              set_to_string(*this, b) + " is not open"});
      }
    }
  return v;
}

std::uint32_t FiniteSpace::minimal_open(int x) const {
  std::uint32_t full = (n_ == 32) ? ~0u : ((1u << n_) - 1u);
  std::uint32_t acc = full;
  for (std::uint32_t o : opens_)
    if (o & (1u << x)) acc &= o;
  return acc;
}

Neighborhood FiniteSpace::neighborhood(int x, int /*level*/) const {
  Neighborhood nb;
  nb.member_mask = minimal_open(x);
  nb.description = "min_open(" + label(x) + ")=" + set_to_string(*this, nb.member_mask);
  return nb;
}

HausdorffReport FiniteSpace::hausdorff() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      bool separated = false;
      for (std::uint32_t u : opens_) {
        if (!(u & (1u << a)) || (u & (1u << b))) continue;
        for (std::uint32_t v : opens_) {
          if (!(v & (1u << b)) || (v & (1u << a))) continue;
          if ((u & v) == 0) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) return {false, "(" + label(a) + "," + label(b) + ")"};
    }
  return {true, ""};
}

bool FiniteSpace::converges_to(const Net<int>& s, int x) const {
  // Enough to check the minimal open: it is contained in every open around x.
  std::uint32_t target = minimal_open(x);
  int n = s.index->size();
  for (int e = 0; e < n; ++e) {
    bool inside = true;
    for (int j : s.index->tail(e)) {
      int v = s.at(j);
      if (v < 0 || v >= n_) throw std::invalid_argument("net value out of carrier range");
      if (!(target & (1u << v))) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

LimitOutcome<int> FiniteSpace::limit(const Net<int>& s, double /*tol*/, int /*budget*/) const {
  HausdorffReport h = hausdorff();
  if (!h.hausdorff)
    throw std::domain_error("separation error: limit undefined, points " + h.witness +
                            " cannot be separated by disjoint opens");
  LimitOutcome<int> out;
  for (int x = 0; x < n_; ++x) {
    if (!converges_to(s, x)) continue;
    if (out.converged)
      throw std::logic_error("two limits " + label(out.value) + " and " + label(x) +
                             " in a separated space");
    out.converged = true;
    out.value = x;
    out.residual = 0.0;
    out.level = 0;
    out.anchor = s.index->canonical_top();
    out.anchor_label = s.index->label(out.anchor);
  }
  if (!out.converged) out.reason = "no point absorbs a tail of the net";
  return out;
}

std::vector<FiniteSpace> enumerate_topologies(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("topology enumeration supports 1..4 points");
  // Finite topologies correspond to preorders: opens are the up-closed sets.
  std::vector<FiniteSpace> result;
  int off = n * (n - 1);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  for (std::uint64_t bits = 0; bits < (1ull << off); ++bits) {
    bool rel[4][4] = {};
    for (int i = 0; i < n; ++i) rel[i][i] = true;
    for (int s = 0; s < off; ++s)
      if (bits & (1ull << s)) rel[slots[s].first][slots[s].second] = true;
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b) {
        if (!rel[a][b]) continue;
        for (int c = 0; c < n; ++c)
          if (rel[b][c] && !rel[a][c]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;
    result.push_back(FiniteSpace::from_preorder(n, [&](int x, int y) { return rel[x][y]; }));
  }
  return result;
}

double IntervalGrid::point_at(int k) const {
  if (k < 0 || k >= resolution) throw std::out_of_range("grid index out of range");
  if (k == resolution - 1) return b;
  return a + k * step();
}

int IntervalGrid::index_of(double x) const {
  double t = (x - a) / step();
  int k = static_cast<int>(std::lround(t));
  if (k < 0 || k >= resolution || std::abs(t - k) > 1e-9 * resolution)
    throw std::domain_error("point " + std::to_string(x) + " is not on " + describe());
  return k;
}

bool IntervalGrid::contains(double x) const {
  double t = (x - a) / step();
  int k = static_cast<int>(std::lround(t));
  return k >= 0 && k < resolution && std::abs(t - k) <= 1e-9 * resolution;
}

double IntervalGrid::snap(double x) const {
  double t = (x - a) / step();
  int k = static_cast<int>(std::lround(t));
  k = std::max(0, std::min(resolution - 1, k));
  return point_at(k);
}

std::string IntervalGrid::describe() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "grid:[%g,%g]:%d", a, b, resolution);
  return buf;
}

}  // namespace netcalc
