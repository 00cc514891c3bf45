#include "linedig/recurrence.hpp"

#include <algorithm>

#include "linedig/errors.hpp"

namespace linedig {

std::string LinearRecurrence::pretty() const {
  std::string rhs;
  for (std::size_t i = order; i-- > 0;) {
    const Rat& a = alpha[i];
    if (a == 0) continue;
    Rat mag = a < 0 ? Rat(-a) : a;
    if (rhs.empty())
      rhs += a < 0 ? "-" : "";
    else
      rhs += a < 0 ? " - " : " + ";
    std::string term = "n_{k-" + std::to_string(order - i) + "}";
    rhs += mag == 1 ? term : to_decimal(mag) + " " + term;
  }
  if (rhs.empty()) rhs = "0";
  std::string out = "n_k = " + rhs + " (k ≥ " + std::to_string(effective_start) + ")";
  for (std::size_t i = 0; i < initial.size(); ++i)
    out += ", n_" + std::to_string(i) + " = " + to_decimal(initial[i]);
  return out;
}

namespace {

// Smallest e <= r such that n_k = sum alpha_i n_{k-r+i} holds at every
// k in [e, r), where terms that would need a negative index must carry a
// zero coefficient. terms[0..r-1] are the exact initial values.
std::size_t effective_start_of(const std::vector<Rat>& alpha, const std::vector<Int>& terms) {
  const std::size_t r = alpha.size();
  std::size_t start = r;
  for (std::size_t k = r; k-- > 0;) {
    bool applicable = true;
    for (std::size_t i = 0; i < r - k; ++i)
      if (alpha[i] != 0) {
        applicable = false;
        break;
      }
    if (!applicable) break;
    Rat rhs = 0;
    for (std::size_t i = r - k; i < r; ++i) rhs += alpha[i] * Rat(terms[k - r + i]);
    if (Rat(terms[k]) != rhs) break;
    start = k;
  }
  return start;
}

}  // namespace

LinearRecurrence recurrence_from_quotient(const std::vector<Int>& sizes, const IntMatrix& b) {
  MonicPolynomial mp = minimal_polynomial(b);
  LinearRecurrence rec;
  rec.order = mp.degree;
  rec.alpha = mp.alpha;
  rec.initial.reserve(rec.order);
  for (std::size_t k = 0; k < rec.order; ++k) rec.initial.push_back(sandwich(sizes, b, k));
  rec.effective_start = effective_start_of(rec.alpha, rec.initial);
  return rec;
}

LinearRecurrence theorem_recurrence(const Digraph& g, const Partition& pi) {
  IntMatrix b = quotient_matrix(g, pi);  // throws NotRegular
  return recurrence_from_quotient(pi.sizes_int(), b);
}

LinearRecurrence shortest_recurrence(const OrderSequence& prefix) {
  const std::size_t n = prefix.size();

  // Berlekamp-Massey over exact rationals. conn(x) = 1 + c_1 x + ... with
  // s_k + sum c_i s_{k-i} = 0 for k >= L.
  std::vector<Rat> conn{1}, prev{1};
  std::size_t length = 0, gap = 1;
  Rat prev_disc = 1;
  for (std::size_t idx = 0; idx < n; ++idx) {
    Rat disc = Rat(prefix[idx]);
    for (std::size_t i = 1; i <= length && i < conn.size(); ++i)
      disc += conn[i] * Rat(prefix[idx - i]);
    if (disc == 0) {
      ++gap;
      continue;
    }
    std::vector<Rat> snapshot = conn;
    Rat factor = disc / prev_disc;
    if (conn.size() < prev.size() + gap) conn.resize(prev.size() + gap, Rat(0));
    for (std::size_t i = 0; i < prev.size(); ++i) conn[i + gap] -= factor * prev[i];
    if (2 * length <= idx) {
      length = idx + 1 - length;
      prev = std::move(snapshot);
      prev_disc = disc;
      gap = 1;
    } else {
      ++gap;
    }
  }

  if (n < 2 * length)
    throw InsufficientPrefix("prefix of " + std::to_string(n) +
                             " terms cannot certify an order-" + std::to_string(length) +
                             " recurrence (need at least " + std::to_string(2 * length) + ")");

  LinearRecurrence rec;
  rec.order = length;
  rec.alpha.assign(length, Rat(0));
  for (std::size_t i = 1; i <= length; ++i)
    if (i < conn.size()) rec.alpha[length - i] = -conn[i];
  rec.initial.assign(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(length));
  rec.effective_start = effective_start_of(rec.alpha, rec.initial);
  return rec;
}

OrderSequence extend(const LinearRecurrence& rec, unsigned long upto) {
  OrderSequence terms;
  terms.reserve(upto + 1);
  for (unsigned long k = 0; k <= upto; ++k) {
    if (k < rec.initial.size()) {
      terms.push_back(rec.initial[k]);
      continue;
    }
    Rat acc = 0;
    for (std::size_t i = 0; i < rec.order; ++i)
      acc += rec.alpha[i] * Rat(terms[k - rec.order + i]);
    if (!is_integral(acc)) throw Error("recurrence extension produced a non-integer term");
    terms.push_back(numerator(acc));
  }
  return terms;
}

std::string classification_name(const Classification& c) {
  if (std::holds_alternative<Vanishing>(c)) return "Vanishing";
  if (std::holds_alternative<Constant>(c)) return "Constant";
  if (std::holds_alternative<Increasing>(c)) return "Increasing";
  return "Other";
}

Classification classify(const LinearRecurrence& rec, unsigned long horizon) {
  const std::size_t r = rec.order;
  if (horizon < rec.effective_start + r)
    throw HorizonTooSmall("horizon " + std::to_string(horizon) + " < effective_start + order = " +
                          std::to_string(rec.effective_start + r));
  OrderSequence terms = extend(rec, horizon);

  // A window of r consecutive zeros pins the state at zero: every later
  // term is a combination of an all-zero window.
  if (r == 0) return Vanishing{};
  for (std::size_t j = 0; j + r <= terms.size(); ++j) {
    bool zero = true;
    for (std::size_t t = 0; t < r && zero; ++t) zero = terms[j + t].is_zero();
    if (zero) return Vanishing{};
  }

  // A constant window followed by one more equal term keeps the state
  // fixed from then on.
  for (std::size_t j = 0; j + r < terms.size(); ++j) {
    bool flat = true;
    for (std::size_t t = 1; t <= r && flat; ++t) flat = terms[j + t] == terms[j];
    if (flat) return Constant{terms[j]};
  }

  // With nonnegative coefficients, r consecutive strictly positive
  // differences reproduce themselves: each new difference obeys the same
  // recurrence, so monotonicity persists beyond the horizon.
  bool nonnegative = std::all_of(rec.alpha.begin(), rec.alpha.end(),
                                 [](const Rat& a) { return a >= 0; });
  if (nonnegative) {
    bool rising = true;
    for (std::size_t k = terms.size() - r; k < terms.size() && rising; ++k)
      rising = terms[k] > terms[k - 1];
    if (rising) return Increasing{};
  }
  return OtherGrowth{};
}

}  // namespace linedig
