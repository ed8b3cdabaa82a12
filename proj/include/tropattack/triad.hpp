#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "tropattack/matrix.hpp"

namespace tropattack {

// Element (a, b, c) of the triad semiring T x T x T. Addition is
// componentwise max; multiplication is the twisted product that makes
// (a, b, c) behave like the 3x3 circulant C[a, b, c].
struct Triad {
  TropScalar a;
  TropScalar b;
  TropScalar c;

  friend bool operator==(const Triad&, const Triad&) = default;

  std::string to_string() const;
};

Triad triad_add(const Triad& u, const Triad& v);
Triad triad_mul(const Triad& u, const Triad& v);

inline Triad oplus(const Triad& u, const Triad& v) { return triad_add(u, v); }
inline Triad otimes(const Triad& u, const Triad& v) { return triad_mul(u, v); }

template <>
struct SemiringTraits<Triad> {
  static Triad zero() { return {}; }
  static Triad one() { return {TropScalar(0), {}, {}}; }
};

std::ostream& operator<<(std::ostream& os, const Triad& t);

using TriadMatrix = BasicMatrix<Triad>;

inline TriadMatrix triad_identity(std::size_t n) { return identity<Triad>(n); }

// Circulant 3x3 matrix C[a, b, c]: row i is row i-1 shifted right by one.
TropMatrix psi(const Triad& u);

// Inverse of psi. Throws NotCirculantError when `m` is not a 3x3 circulant.
Triad psi_inv(const TropMatrix& m);

// Block embedding of an n x n triad matrix into a 3n x 3n tropical matrix:
// entry (i, j) becomes the 3x3 block psi(A(i, j)).
TropMatrix embed(const TriadMatrix& a);

// Inverse of embed. Every 3x3 block must be circulant (NotCirculantError
// otherwise); the matrix must be square with side divisible by 3.
TriadMatrix extract(const TropMatrix& m);

inline TriadMatrix triad_mat_mul(const TriadMatrix& a, const TriadMatrix& b) {
  return mat_mul(a, b);
}

inline TriadMatrix triad_mat_pow(const TriadMatrix& a, std::uint64_t t) {
  return mat_pow(a, t);
}

// Product computed through the embedding; kept as a cross-check of the native path.
TriadMatrix triad_mat_mul_embedded(const TriadMatrix& a, const TriadMatrix& b);

}  // namespace tropattack
