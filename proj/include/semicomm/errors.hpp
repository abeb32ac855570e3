#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace semicomm {

// Base class for everything this library throws.
struct SemicommError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedTable : SemicommError {
  using SemicommError::SemicommError;
};

// Carries one witness triple (a*b)*c != a*(b*c).
struct NotAssociative : SemicommError {
  int a, b, c;
  NotAssociative(int a_, int b_, int c_)
      : SemicommError("table is not associative: witness (" + std::to_string(a_) + ", "
                      + std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}
};

struct OutOfRange : SemicommError {
  using SemicommError::SemicommError;
};

struct TooLarge : SemicommError {
  using SemicommError::SemicommError;
};

struct NotIdempotent : SemicommError {
  using SemicommError::SemicommError;
};

struct NotAGroup : SemicommError {
  using SemicommError::SemicommError;
};

struct NotNormal : SemicommError {
  using SemicommError::SemicommError;
};

struct NotNormalized : SemicommError {
  int row, col;
  NotNormalized(int row_, int col_)
      : SemicommError("sandwich matrix is not normalized at entry (" + std::to_string(row_)
                      + ", " + std::to_string(col_) + ")"),
        row(row_),
        col(col_) {}
};

struct NotCompletelySimple : SemicommError {
  using SemicommError::SemicommError;
};

// Internal consistency failure; unreachable when preconditions hold.
struct NoUniqueInverse : SemicommError {
  using SemicommError::SemicommError;
};

struct NotACongruence : SemicommError {
  using SemicommError::SemicommError;
};

// The componentwise relation of a triple fails the congruence check.
struct NotLinked : SemicommError {
  std::array<int, 4> witness;  // (a, b, c, d) with a~b, c~d but ac !~ bd
  NotLinked(std::array<int, 4> w)
      : SemicommError("triple is not linked: congruence check fails at (" + std::to_string(w[0])
                      + ", " + std::to_string(w[1]) + ", " + std::to_string(w[2]) + ", "
                      + std::to_string(w[3]) + ")"),
        witness(w) {}
};

struct MethodUnavailable : SemicommError {
  using SemicommError::SemicommError;
};

}  // namespace semicomm
