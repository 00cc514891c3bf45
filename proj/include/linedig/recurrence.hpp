#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "linedig/digraph.hpp"
#include "linedig/minpoly.hpp"
#include "linedig/partition.hpp"

namespace linedig {

/// Term list n_0, n_1, ... of an order sequence.
using OrderSequence = std::vector<Int>;

/// Constant-coefficient linear recurrence
///   n_k = alpha_{r-1} n_{k-1} + ... + alpha_0 n_{k-r}
/// together with the initial terms n_0..n_{r-1} and the smallest index
/// effective_start <= r from which the identity provably holds. The start
/// can undershoot the order when low coefficients vanish: the CK(2,4)
/// recurrence has order 3 yet applies from k = 2.
struct LinearRecurrence {
  std::size_t order = 0;
  std::vector<Rat> alpha;  // alpha[i] multiplies n_{k-order+i}, i = 0..order-1
  std::vector<Int> initial;
  std::size_t effective_start = 0;

  /// Characteristic polynomial x^r - alpha_{r-1} x^{r-1} - ... - alpha_0.
  MonicPolynomial characteristic() const { return MonicPolynomial{order, alpha}; }

  /// "n_k = n_{k-1} + n_{k-2} (k >= 2), n_0 = 18, n_1 = 30" rendering
  /// (with a real >= sign).
  std::string pretty() const;

  bool operator==(const LinearRecurrence& rhs) const = default;
};

/// Recurrence of the main theorem, read off a regular partition: order and
/// coefficients from the minimal polynomial of the quotient matrix, initial
/// terms from s B^k j^T, effective start from the vector identities
/// s (B^k - sum alpha_i B^{k-r+i}) j^T = 0 tested downward from k = r-1.
/// Throws NotRegular when pi is not regular.
LinearRecurrence theorem_recurrence(const Digraph& g, const Partition& pi);

/// Same derivation from an explicit (s, B) pair, for quotient fixtures that
/// exist without their digraph.
LinearRecurrence recurrence_from_quotient(const std::vector<Int>& sizes, const IntMatrix& b);

/// Minimal-order recurrence satisfied by every supplied term from its
/// effective start onward (Berlekamp-Massey over exact rationals). Throws
/// InsufficientPrefix when the prefix is too short to certify minimality,
/// i.e. shorter than twice the resulting order.
LinearRecurrence shortest_recurrence(const OrderSequence& prefix);

/// n_0..n_upto: stored initial terms first, recurrence extension after.
OrderSequence extend(const LinearRecurrence& rec, unsigned long upto);

struct Vanishing {};
struct Constant {
  Int value;
};
struct Increasing {};
struct OtherGrowth {};
using Classification = std::variant<Vanishing, Constant, Increasing, OtherGrowth>;

std::string classification_name(const Classification& c);

/// Asymptotic class of the extended sequence, certified in exact arithmetic:
///  - Vanishing: a window of `order` consecutive zeros inside the governed
///    range forces zero forever;
///  - Constant:  a fixed window followed by one more equal term persists;
///  - Increasing: nonnegative coefficients and a strictly increasing
///    difference window persist.
/// Throws HorizonTooSmall when horizon < effective_start + order.
Classification classify(const LinearRecurrence& rec, unsigned long horizon);

}  // namespace linedig
