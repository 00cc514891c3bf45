#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "linedig/matrix.hpp"
#include "linedig/numeric.hpp"

namespace linedig {

/// Monic polynomial m(x) = x^r - alpha_{r-1} x^{r-1} - ... - alpha_0.
/// The stored coefficients are the alpha_i (note the sign convention: they
/// are exactly the recurrence coefficients they induce). For an integer
/// matrix the alpha_i are integers; they are kept as exact rationals so the
/// same type serves sequence-side recurrences.
struct MonicPolynomial {
  std::size_t degree = 0;
  std::vector<Rat> alpha;  // alpha[i] multiplies x^i, i = 0..degree-1

  /// Evaluates m at the matrix argument. Mostly used by tests to confirm
  /// annihilation.
  IntMatrix evaluate(const IntMatrix& b) const;  // throws if any alpha non-integral

  /// "x^3 - x^2 - x" style rendering.
  std::string text() const;

  bool operator==(const MonicPolynomial& rhs) const = default;
};

/// Minimal polynomial of a square matrix: the least-degree monic m with
/// m(B) = 0, found as the first linear dependence among the flattened
/// Krylov sequence I, B, B^2, ... under exact elimination.
MonicPolynomial minimal_polynomial(const IntMatrix& b);

}  // namespace linedig
