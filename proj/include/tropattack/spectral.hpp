#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropattack/matrix.hpp"
#include "tropattack/rational.hpp"

namespace tropattack {

// A cycle in the digraph of finite entries, listed in traversal order. The
// closing arc runs from vertices.back() to vertices.front().
struct CriticalCycle {
  std::vector<std::size_t> vertices;

  std::size_t length() const { return vertices.size(); }
  bool contains(std::size_t v) const;
  // Successor of `v` along the cycle; v must be on the cycle.
  std::size_t next(std::size_t v) const;

  friend bool operator==(const CriticalCycle&, const CriticalCycle&) = default;
};

// Pieces of the weak CSR expansion built from one critical cycle Z:
//   A^t = lambda^t (C S^(t mod l_Z) R)  ⊕  B^t   for all large enough t.
struct CsrDecomposition {
  Rational lambda;
  CriticalCycle cycle;
  RatTropMatrix C;  // columns of U outside Z are -inf
  RatTropMatrix S;  // normalised cycle arcs only
  RatTropMatrix R;  // rows of U outside Z are -inf
  RatTropMatrix B;  // A with the rows and columns of Z removed
  RatTropMatrix U;  // Kleene star of the l_Z-th power of A - lambda
};

// Maximum cycle mean via Karp's recurrence on each strongly connected
// component. Returns -inf when the finite-entry digraph is acyclic.
RatScalar max_cycle_mean(const TropMatrix& a);
RatScalar max_cycle_mean(const RatTropMatrix& a);

// Every finite entry shifted by -lambda.
RatTropMatrix normalize(const TropMatrix& a, const Rational& lambda);

// I ⊕ A ⊕ ... ⊕ A^(n-1), computed by all-pairs relaxation. Throws
// DivergentStarError if A has a cycle of positive weight.
RatTropMatrix kleene_star(const RatTropMatrix& a);

// Deterministic critical cycle: walk the critical arcs from the lowest-index
// critical vertex, always taking the lowest-index successor, and return the
// first cycle closed. `lambda` must equal max_cycle_mean(a) and be finite.
CriticalCycle critical_cycle(const TropMatrix& a, const Rational& lambda);

// Throws AcyclicError when max_cycle_mean(a) is -inf.
CsrDecomposition csr_decompose(const TropMatrix& a);

// Right-hand side of the CSR expansion for exponent t.
RatTropMatrix csr_power(const CsrDecomposition& d, std::uint64_t t);

// Smallest T <= horizon such that csr_power(d, t) == a^t for every t in
// [T, horizon]; horizon + 1 if the expansion is wrong at t = horizon.
std::uint64_t observed_csr_threshold(const TropMatrix& a, const CsrDecomposition& d,
                                     std::uint64_t horizon);

}  // namespace tropattack
