#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace netcalc {

// A finite directed preorder: every pair of elements has a common upper bound.
// Three shapes share one interface: an explicit relation table, an initial
// segment {0, ..., depth-1} of the naturals, and componentwise products.
// Elements are addressed by their position in the canonical enumeration;
// for products that enumeration is row-major in the left factor.
class DirectedSet {
 public:
  using Ptr = std::shared_ptr<const DirectedSet>;

  enum class Kind { finite_table, nat_trunc, product };

  // Explicit tables take the nontrivial pairs only; the reflexive diagonal is
  // filled in. Transitive closure is NOT taken, validation reports the holes.
  static Ptr finite(std::vector<std::string> labels,
                    const std::vector<std::pair<std::string, std::string>>& related);
  static Ptr finite_by_index(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& related);
  static Ptr nat_trunc(int depth);
  static Ptr product(Ptr left, Ptr right);

  Kind kind() const { return kind_; }
  int size() const { return size_; }
  bool leq(int a, int b) const;
  std::string label(int i) const;
  int index_of(const std::string& label) const;  // finite_table only

  // Factors of a product node.
  const Ptr& left() const;
  const Ptr& right() const;
  int pair_index(int a, int b) const;  // product: flat index of (a, b)

  // Smallest witness that the whole carrier is bounded: folds pairwise upper
  // bounds over the canonical enumeration. Throws if some pair has none.
  int canonical_top() const;

  // All j with anchor <= j, in canonical order.
  std::vector<int> tail(int anchor) const;

  bool same_as(const DirectedSet& other) const;

 private:
  DirectedSet() = default;
  void check_element(int i) const;

  Kind kind_ = Kind::nat_trunc;
  int size_ = 0;
  std::vector<std::string> labels_;   // finite_table
  std::vector<std::uint8_t> rel_;     // finite_table, row-major size*size
  Ptr left_, right_;                  // product
};

struct DirectedViolation {
  enum class Kind { reflexivity, transitivity, upper_bound };
  Kind kind;
  std::vector<std::string> elements;  // witnesses, by label
  std::string detail;
};

struct DirectedValidation {
  bool ok = true;
  std::vector<DirectedViolation> violations;
};

// Exhaustive axiom scan for explicit tables; products of validated factors
// inherit reflexivity, transitivity and directedness componentwise, so product
// nodes validate their factors instead of scanning the full carrier.
DirectedValidation validate_directed(const DirectedSet& ds);

// First element in canonical enumeration that bounds both a and b.
// Throws std::domain_error (a directedness violation) if none exists.
int upper_bound(const DirectedSet& ds, int a, int b);

// Enumerates every directed preorder on {0..n-1}, n <= 3 is cheap, n == 4 is
// still fine; used by the exhaustive suites.
std::vector<DirectedSet::Ptr> enumerate_directed(int n);

}  // namespace netcalc
