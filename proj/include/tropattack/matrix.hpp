#pragma once

#include <cstdint>
#include <string>

#include "tropattack/basic_matrix.hpp"
#include "tropattack/kernels.hpp"

namespace tropattack {

template <class S>
BasicMatrix<S> mat_mul(const BasicMatrix<S>& a, const BasicMatrix<S>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (kernels::worth_parallel(a.rows(), a.cols(), b.cols())) {
    return kernels::mat_mul_parallel(a, b);
  }
  return kernels::mat_mul_serial(a, b);
}

// t-th tropical power by repeated squaring; t = 0 gives the identity.
template <class S>
BasicMatrix<S> mat_pow(const BasicMatrix<S>& a, std::uint64_t t) {
  if (!a.is_square()) throw ShapeError("mat_pow: matrix is not square");
  BasicMatrix<S> result = identity<S>(a.rows());
  BasicMatrix<S> base = a;
  bool first = true;
  while (t != 0) {
    if (t & 1U) {
      result = first ? base : mat_mul(result, base);
      first = false;
    }
    t >>= 1U;
    if (t != 0) base = mat_mul(base, base);
  }
  return result;
}

}  // namespace tropattack
