#include "netcalc/directed.hpp"

#include <algorithm>
#include <stdexcept>

namespace netcalc {

DirectedSet::Ptr DirectedSet::finite_by_index(
    std::vector<std::string> labels, const std::vector<std::pair<int, int>>& related) {
  if (labels.empty())
    throw std::invalid_argument("directed set carrier must not be empty");
  auto ds = std::shared_ptr<DirectedSet>(new DirectedSet());
  ds->kind_ = Kind::finite_table;
  ds->size_ = static_cast<int>(labels.size());
  ds->labels_ = std::move(labels);
  ds->rel_.assign(static_cast<size_t>(ds->size_) * ds->size_, 0);
  // callers list the nontrivial pairs; the diagonal is always present
  for (int i = 0; i < ds->size_; ++i)
    ds->rel_[static_cast<size_t>(i) * ds->size_ + i] = 1;
  for (auto [a, b] : related) {
    if (a < 0 || a >= ds->size_ || b < 0 || b >= ds->size_)
      throw std::invalid_argument("relation pair out of range");
    ds->rel_[static_cast<size_t>(a) * ds->size_ + b] = 1;
  }
  return ds;
}

DirectedSet::Ptr DirectedSet::finite(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& related) {
  std::vector<std::pair<int, int>> by_index;
  by_index.reserve(related.size());
  auto find = [&](const std::string& s) {
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end())
      throw std::invalid_argument("relation mentions unknown element '" + s + "'");
    return static_cast<int>(it - labels.begin());
  };
  for (const auto& [a, b] : related) by_index.emplace_back(find(a), find(b));
  return finite_by_index(std::move(labels), by_index);
}

DirectedSet::Ptr DirectedSet::nat_trunc(int depth) {
  if (depth <= 0) throw std::invalid_argument("nat_trunc depth must be positive");
  auto ds = std::shared_ptr<DirectedSet>(new DirectedSet());
  ds->kind_ = Kind::nat_trunc;
  ds->size_ = depth;
  return ds;
}

DirectedSet::Ptr DirectedSet::product(Ptr left, Ptr right) {
  if (!left || !right) throw std::invalid_argument("product factor is null");
  auto ds = std::shared_ptr<DirectedSet>(new DirectedSet());
  ds->kind_ = Kind::product;
  ds->size_ = left->size() * right->size();
  ds->left_ = std::move(left);
  ds->right_ = std::move(right);
  return ds;
}

void DirectedSet::check_element(int i) const {
  if (i < 0 || i >= size_) throw std::out_of_range("directed set element out of range");
}

bool DirectedSet::leq(int a, int b) const {
  check_element(a);
  check_element(b);
  switch (kind_) {
    case Kind::finite_table:
      return rel_[static_cast<size_t>(a) * size_ + b] != 0;
    case Kind::nat_trunc:
      return a <= b;
    case Kind::product: {
      int rn = right_->size();
      return left_->leq(a / rn, b / rn) && right_->leq(a % rn, b % rn);
    }
  }
  return false;
}

std::string DirectedSet::label(int i) const {
  check_element(i);
  switch (kind_) {
    case Kind::finite_table:
      return labels_[i];
    case Kind::nat_trunc:
      return std::to_string(i);
    case Kind::product: {
      int rn = right_->size();
      return "(" + left_->label(i / rn) + "," + right_->label(i % rn) + ")";
    }
  }
  return {};
}

int DirectedSet::index_of(const std::string& label) const {
  if (kind_ != Kind::finite_table)
    throw std::logic_error("index_of requires an explicit carrier");
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw std::invalid_argument("no element labelled '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

const DirectedSet::Ptr& DirectedSet::left() const {
  if (kind_ != Kind::product) throw std::logic_error("not a product");
  return left_;
}

const DirectedSet::Ptr& DirectedSet::right() const {
  if (kind_ != Kind::product) throw std::logic_error("not a product");
  return right_;
}

int DirectedSet::pair_index(int a, int b) const {
  if (kind_ != Kind::product) throw std::logic_error("not a product");
  left_->check_element(a);
  right_->check_element(b);
  return a * right_->size() + b;
}

int DirectedSet::canonical_top() const {
  int top = 0;
  for (int i = 1; i < size_; ++i) top = upper_bound(*this, top, i);
  return top;
}

std::vector<int> DirectedSet::tail(int anchor) const {
  check_element(anchor);
  std::vector<int> out;
  for (int j = 0; j < size_; ++j)
    if (leq(anchor, j)) out.push_back(j);
  return out;
}

bool DirectedSet::same_as(const DirectedSet& other) const {
  if (kind_ != other.kind_ || size_ != other.size_) return false;
  switch (kind_) {
    case Kind::nat_trunc:
      return true;
    case Kind::finite_table:
      return labels_ == other.labels_ && rel_ == other.rel_;
    case Kind::product:
      return left_->same_as(*other.left_) && right_->same_as(*other.right_);
  }
  return false;
}

int upper_bound(const DirectedSet& ds, int a, int b) {
  for (int e = 0; e < ds.size(); ++e)
    if (ds.leq(a, e) && ds.leq(b, e)) return e;
  throw std::domain_error("no upper bound for (" + ds.label(a) + "," + ds.label(b) +
                          "): directedness violated");
}

namespace {

DirectedValidation validate_table(const DirectedSet& ds) {
  DirectedValidation report;
  int n = ds.size();
  for (int a = 0; a < n; ++a) {
    if (!ds.leq(a, a)) {
      report.violations.push_back({DirectedViolation::Kind::reflexivity,
                                   {ds.label(a)},
                                   "missing " + ds.label(a) + " <= " + ds.label(a)});
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!ds.leq(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (ds.leq(b, c) && !ds.leq(a, c)) {
          report.violations.push_back(
              {DirectedViolation::Kind::transitivity,
               {ds.label(a), ds.label(b), ds.label(c)},
               ds.label(a) + " <= " + ds.label(b) + " <= " + ds.label(c) +
                   " but not " + ds.label(a) + " <= " + ds.label(c)});
        }
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool bounded = false;
      for (int e = 0; e < n && !bounded; ++e) bounded = ds.leq(a, e) && ds.leq(b, e);
      if (!bounded) {
        report.violations.push_back({DirectedViolation::Kind::upper_bound,
                                     {ds.label(a), ds.label(b)},
                                     "no upper bound for (" + ds.label(a) + "," +
                                         ds.label(b) + ")"});
      }
    }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace

DirectedValidation validate_directed(const DirectedSet& ds) {
  switch (ds.kind()) {
    case DirectedSet::Kind::finite_table:
      return validate_table(ds);
    case DirectedSet::Kind::nat_trunc:
      return {};  // total order on {0..n-1}: axioms hold by construction
    case DirectedSet::Kind::product: {
      DirectedValidation report = validate_directed(*ds.left());
      DirectedValidation rr = validate_directed(*ds.right());
      report.violations.insert(report.violations.end(), rr.violations.begin(),
                               rr.violations.end());
      report.ok = report.violations.empty();
      return report;
    }
  }
  return {};
}

std::vector<DirectedSet::Ptr> enumerate_directed(int n) {
  if (n <= 0 || n > 4) throw std::invalid_argument("enumerate_directed wants 1 <= n <= 4");
  std::vector<DirectedSet::Ptr> out;
  int offdiag = n * (n - 1);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  for (std::uint32_t mask = 0; mask < (1u << offdiag); ++mask) {
    std::vector<std::pair<int, int>> rel;
    int bit = 0;
    for (int a = 0; a < n; ++a) {
      rel.emplace_back(a, a);
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        if (mask & (1u << bit)) rel.emplace_back(a, b);
        ++bit;
      }
    }
    auto ds = DirectedSet::finite_by_index(labels, rel);
    if (validate_directed(*ds).ok) out.push_back(std::move(ds));
  }
  return out;
}

}  // namespace netcalc
