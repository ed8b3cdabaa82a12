#pragma once

// Max-plus matrix product kernels. mat_mul_serial is the reference
// implementation; mat_mul_parallel splits output rows across OpenMP threads
// and must agree with it entry for entry.

#include <cstddef>
#include <exception>

#include <omp.h>

#include "tropattack/basic_matrix.hpp"

namespace tropattack::kernels {

// Below this many inner-loop updates the OpenMP fork costs more than it saves.
inline constexpr std::size_t kParallelWork = std::size_t{1} << 15;

inline bool worth_parallel(std::size_t rows, std::size_t inner, std::size_t cols) {
  return rows > 1 && rows * inner * cols >= kParallelWork && omp_get_max_threads() > 1;
}

namespace detail {

template <class S>
void mul_row(const BasicMatrix<S>& a, const BasicMatrix<S>& b, BasicMatrix<S>& out,
             std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const S& aik = a(i, k);
    if (aik == SemiringTraits<S>::zero()) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      out(i, j) = oplus(out(i, j), otimes(aik, b(k, j)));
    }
  }
}

}  // namespace detail

template <class S>
BasicMatrix<S> mat_mul_serial(const BasicMatrix<S>& a, const BasicMatrix<S>& b) {
  if (a.cols() != b.rows()) throw ShapeError("mat_mul_serial: shape mismatch");
  BasicMatrix<S> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) detail::mul_row(a, b, out, i);
  return out;
}

template <class S>
BasicMatrix<S> mat_mul_parallel(const BasicMatrix<S>& a, const BasicMatrix<S>& b) {
  if (a.cols() != b.rows()) throw ShapeError("mat_mul_parallel: shape mismatch");
  BasicMatrix<S> out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    try {
      detail::mul_row(a, b, out, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(tropattack_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace tropattack::kernels
