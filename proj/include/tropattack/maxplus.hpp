#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>

#include "tropattack/error.hpp"
#include "tropattack/rational.hpp"

namespace tropattack {

// Element of the max-plus semiring over V: either a finite V or the
// additive identity -inf. -inf is a flag, never a large negative number.
template <class V>
class MaxPlus {
 public:
  using value_type = V;

  // Default-constructed scalars are -inf (the semiring zero).
  constexpr MaxPlus() = default;
  constexpr MaxPlus(V value) : finite_(true), value_(value) {}  // NOLINT(implicit)

  static constexpr MaxPlus neg_inf() { return MaxPlus(); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_neg_inf() const { return !finite_; }

  const V& value() const {
    if (!finite_) throw ValidationError("value() on -inf");
    return value_;
  }

  friend bool operator==(const MaxPlus& a, const MaxPlus& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  // Total order with -inf below every finite value.
  friend bool operator<(const MaxPlus& a, const MaxPlus& b) {
    if (!b.finite_) return false;
    if (!a.finite_) return true;
    return a.value_ < b.value_;
  }

  std::string to_string() const {
    if (!finite_) return "-inf";
    if constexpr (std::is_same_v<V, Rational>) {
      return value_.to_string();
    } else {
      return std::to_string(value_);
    }
  }

 private:
  bool finite_ = false;
  V value_{};
};

using TropScalar = MaxPlus<std::int64_t>;
using RatScalar = MaxPlus<Rational>;

template <class V>
MaxPlus<V> oplus(const MaxPlus<V>& a, const MaxPlus<V>& b) {
  return a < b ? b : a;
}

inline TropScalar otimes(const TropScalar& a, const TropScalar& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return TropScalar::neg_inf();
  return checked_add(a.value(), b.value());
}

inline RatScalar otimes(const RatScalar& a, const RatScalar& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return RatScalar::neg_inf();
  return a.value() + b.value();
}

inline TropScalar trop_add(TropScalar a, TropScalar b) { return oplus(a, b); }
inline TropScalar trop_mul(TropScalar a, TropScalar b) { return otimes(a, b); }

inline RatScalar to_rational(const TropScalar& s) {
  return s.is_finite() ? RatScalar(Rational(s.value())) : RatScalar::neg_inf();
}

// Semiring identities used by the generic matrix code.
template <class S>
struct SemiringTraits;

template <class V>
struct SemiringTraits<MaxPlus<V>> {
  static MaxPlus<V> zero() { return MaxPlus<V>::neg_inf(); }
  static MaxPlus<V> one() { return MaxPlus<V>(V(0)); }
};

template <class V>
std::ostream& operator<<(std::ostream& os, const MaxPlus<V>& s) {
  return os << s.to_string();
}

}  // namespace tropattack
