#pragma once

#include <stdexcept>
#include <string>

namespace tropattack {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checked integer arithmetic left the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

// A 3x3 matrix (or a 3x3 block of a larger one) is not circulant, so it has
// no preimage under the triad embedding.
class NotCirculantError : public Error {
 public:
  using Error::Error;
};

// Kleene star requested for a matrix with a positive-weight cycle.
class DivergentStarError : public Error {
 public:
  using Error::Error;
};

// Spectral operation needs at least one cycle in the digraph of finite entries.
class AcyclicError : public Error {
 public:
  using Error::Error;
};

class AttackFailedError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Secrets disagree with the transcript (K_A != K_B, or a stored key is wrong).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropattack
