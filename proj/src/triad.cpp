#include "tropattack/triad.hpp"

namespace tropattack {

std::string Triad::to_string() const {
  return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Triad& t) { return os << t.to_string(); }

Triad triad_add(const Triad& u, const Triad& v) {
  return {oplus(u.a, v.a), oplus(u.b, v.b), oplus(u.c, v.c)};
}

Triad triad_mul(const Triad& u, const Triad& v) {
  auto sum3 = [](TropScalar x, TropScalar y, TropScalar z) { return oplus(oplus(x, y), z); };
  return {
      sum3(otimes(u.a, v.a), otimes(u.b, v.c), otimes(u.c, v.b)),
      sum3(otimes(u.a, v.b), otimes(u.b, v.a), otimes(u.c, v.c)),
      sum3(otimes(u.a, v.c), otimes(u.b, v.b), otimes(u.c, v.a)),
  };
}

namespace {

// Entry (i, j) of C[c0, c1, c2] is c_{(j - i) mod 3}.
const TropScalar& coordinate(const Triad& u, std::size_t k) {
  switch (k % 3) {
    case 0:
      return u.a;
    case 1:
      return u.b;
    default:
      return u.c;
  }
}

Triad block_to_triad(const TropMatrix& m, std::size_t r0, std::size_t c0) {
  Triad u{m(r0, c0), m(r0, c0 + 1), m(r0, c0 + 2)};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (!(m(r0 + i, c0 + j) == coordinate(u, j + 3 - i))) {
        throw NotCirculantError("block at (" + std::to_string(r0) + ", " + std::to_string(c0) +
                                ") is not circulant");
      }
    }
  }
  return u;
}

}  // namespace

TropMatrix psi(const Triad& u) {
  TropMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = coordinate(u, j + 3 - i);
  }
  return m;
}

Triad psi_inv(const TropMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw ShapeError("psi_inv: expected a 3x3 matrix");
  return block_to_triad(m, 0, 0);
}

TropMatrix embed(const TriadMatrix& a) {
  TropMatrix m(3 * a.rows(), 3 * a.cols());
  for (std::size_t bi = 0; bi < a.rows(); ++bi) {
    for (std::size_t bj = 0; bj < a.cols(); ++bj) {
      const Triad& u = a(bi, bj);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m(3 * bi + i, 3 * bj + j) = coordinate(u, j + 3 - i);
      }
    }
  }
  return m;
}

TriadMatrix extract(const TropMatrix& m) {
  if (m.rows() % 3 != 0 || m.cols() % 3 != 0) {
    throw ShapeError("extract: dimensions must be multiples of 3");
  }
  TriadMatrix a(m.rows() / 3, m.cols() / 3);
  for (std::size_t bi = 0; bi < a.rows(); ++bi) {
    for (std::size_t bj = 0; bj < a.cols(); ++bj) a(bi, bj) = block_to_triad(m, 3 * bi, 3 * bj);
  }
  return a;
}

TriadMatrix triad_mat_mul_embedded(const TriadMatrix& a, const TriadMatrix& b) {
  return extract(mat_mul(embed(a), embed(b)));
}

}  // namespace tropattack
