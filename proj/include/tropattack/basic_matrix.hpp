#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tropattack/error.hpp"
#include "tropattack/maxplus.hpp"

namespace tropattack {

// Dense row-major matrix over a semiring S. S must provide oplus/otimes
// (found by ADL) and a SemiringTraits<S> specialisation.
template <class S>
class BasicMatrix {
 public:
  using scalar_type = S;

  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, SemiringTraits<S>::zero()) {}
  BasicMatrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw ShapeError("entry count does not match " + std::to_string(rows_) + "x" +
                       std::to_string(cols_));
    }
  }
  BasicMatrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const S> row(std::size_t i) const {
    return std::span<const S>(entries_).subspan(i * cols_, cols_);
  }
  std::span<const S> entries() const { return entries_; }

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> entries_;
};

using TropMatrix = BasicMatrix<TropScalar>;
using RatTropMatrix = BasicMatrix<RatScalar>;

template <class S>
BasicMatrix<S> identity(std::size_t n) {
  BasicMatrix<S> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = SemiringTraits<S>::one();
  return m;
}

inline TropMatrix trop_identity(std::size_t n) { return identity<TropScalar>(n); }

template <class S>
BasicMatrix<S> mat_add(const BasicMatrix<S>& a, const BasicMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("mat_add: shape mismatch");
  }
  BasicMatrix<S> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = oplus(a(i, j), b(i, j));
  }
  return out;
}

// Tropical scaling: every entry is shifted by `s` (s ⊙ A).
template <class S>
BasicMatrix<S> scale(const S& s, const BasicMatrix<S>& a) {
  BasicMatrix<S> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = otimes(s, a(i, j));
  }
  return out;
}

inline RatTropMatrix to_rational(const TropMatrix& a) {
  RatTropMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = to_rational(a(i, j));
  }
  return out;
}

// Inverse of to_rational; throws ValidationError on a non-integer entry.
inline TropMatrix to_integer(const RatTropMatrix& a) {
  TropMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_finite()) out(i, j) = a(i, j).value().to_integer();
    }
  }
  return out;
}

template <class S>
std::string to_string(const BasicMatrix<S>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace tropattack
