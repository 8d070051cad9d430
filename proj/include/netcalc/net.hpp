#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "netcalc/directed.hpp"

namespace netcalc {

// A net is a total valuation of a directed index set. Values are stored as a
// table in canonical enumeration order; nothing here is lazy.
template <class T>
struct Net {
  DirectedSet::Ptr index;
  std::vector<T> values;

  Net() = default;
  Net(DirectedSet::Ptr idx, std::vector<T> vals)
      : index(std::move(idx)), values(std::move(vals)) {
    if (!index) throw std::invalid_argument("net needs an index set");
    if (static_cast<int>(values.size()) != index->size())
      throw std::invalid_argument("net valuation size does not match carrier");
  }

  const T& at(int i) const { return values.at(static_cast<size_t>(i)); }
  int size() const { return index->size(); }
};

template <class T>
Net<T> constant_net(DirectedSet::Ptr index, T value) {
  std::vector<T> vals(static_cast<size_t>(index->size()), value);
  return Net<T>(std::move(index), std::move(vals));
}

// Entrywise image of a net; the index set is untouched.
template <class F, class T>
auto map_net(F&& f, const Net<T>& s) {
  using U = decltype(f(s.values[0]));
  std::vector<U> out;
  out.reserve(s.values.size());
  for (const T& v : s.values) out.push_back(f(v));
  return Net<U>(s.index, std::move(out));
}

// Image under a partial map: f returns an engaged optional on its domain.
// The offending index element is named on failure.
template <class F, class T>
auto map_net_partial(F&& f, const Net<T>& s) {
  using U = typename decltype(f(s.values[0]))::value_type;
  std::vector<U> out;
  out.reserve(s.values.size());
  for (int i = 0; i < s.size(); ++i) {
    auto r = f(s.values[static_cast<size_t>(i)]);
    if (!r)
      throw std::domain_error("map undefined at index element " + s.index->label(i));
    out.push_back(*r);
  }
  return Net<U>(s.index, std::move(out));
}

// Doubly indexed net in matrix form over rows x cols. Column c is the net
// (entries(r, c))_r over the row index; row r is the net (entries(r, c))_c over
// the column index, i.e. a column of the transpose.
template <class T>
struct NetMatrix {
  DirectedSet::Ptr rows;
  DirectedSet::Ptr cols;
  std::vector<T> entries;  // row-major

  NetMatrix() = default;
  NetMatrix(DirectedSet::Ptr r, DirectedSet::Ptr c, std::vector<T> e)
      : rows(std::move(r)), cols(std::move(c)), entries(std::move(e)) {
    if (!rows || !cols) throw std::invalid_argument("matrix needs both index sets");
    if (static_cast<int>(entries.size()) != rows->size() * cols->size())
      throw std::invalid_argument("matrix entry table does not match carrier product");
  }

  const T& at(int r, int c) const {
    return entries.at(static_cast<size_t>(r) * cols->size() + c);
  }

  Net<T> column(int c) const {
    std::vector<T> vals;
    vals.reserve(static_cast<size_t>(rows->size()));
    for (int r = 0; r < rows->size(); ++r) vals.push_back(at(r, c));
    return Net<T>(rows, std::move(vals));
  }

  Net<T> row(int r) const {
    std::vector<T> vals;
    vals.reserve(static_cast<size_t>(cols->size()));
    for (int c = 0; c < cols->size(); ++c) vals.push_back(at(r, c));
    return Net<T>(cols, std::move(vals));
  }

  // The columns of the matrix, bundled as a net over the column index.
  Net<Net<T>> as_net_of_columns() const {
    std::vector<Net<T>> vals;
    vals.reserve(static_cast<size_t>(cols->size()));
    for (int c = 0; c < cols->size(); ++c) vals.push_back(column(c));
    return Net<Net<T>>(cols, std::move(vals));
  }
};

template <class T>
NetMatrix<T> transpose(const NetMatrix<T>& m) {
  std::vector<T> flipped(m.entries.size());
  int nr = m.rows->size(), nc = m.cols->size();
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c)
      flipped[static_cast<size_t>(c) * nr + r] = m.at(r, c);
  return NetMatrix<T>(m.cols, m.rows, std::move(flipped));
}

template <class F, class T>
auto map_matrix(F&& f, const NetMatrix<T>& m) {
  using U = decltype(f(m.entries[0]));
  std::vector<U> out;
  out.reserve(m.entries.size());
  for (const T& v : m.entries) out.push_back(f(v));
  return NetMatrix<U>(m.rows, m.cols, std::move(out));
}

// Flattens a net whose values are nets into matrix form. Every inner net must
// live on one and the same index set; anything else is not in matrix form.
template <class T>
NetMatrix<T> lift_net_of_nets(const Net<Net<T>>& s) {
  if (s.size() == 0) throw std::invalid_argument("empty net of nets");
  const DirectedSet::Ptr inner = s.at(0).index;
  for (int c = 1; c < s.size(); ++c)
    if (!inner->same_as(*s.at(c).index))
      throw std::invalid_argument(
          "net of nets is not in matrix form: inner index at " + s.index->label(c) +
          " differs from the first");
  int nr = inner->size(), nc = s.size();
  std::vector<T> entries(static_cast<size_t>(nr) * nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c)
      entries[static_cast<size_t>(r) * nc + c] = s.at(c).at(r);
  return NetMatrix<T>(inner, s.index, std::move(entries));
}

template <class T>
bool same_valuation(const Net<T>& a, const Net<T>& b) {
  return a.index->same_as(*b.index) && a.values == b.values;
}

}  // namespace netcalc
