#include "linedig/minpoly.hpp"

#include <cassert>

#include "linedig/errors.hpp"

namespace linedig {

IntMatrix MonicPolynomial::evaluate(const IntMatrix& b) const {
  if (b.rows() != b.cols()) throw DimensionMismatch("polynomial of a non-square matrix");
  IntMatrix acc = mat_pow(b, degree);
  IntMatrix power = IntMatrix::identity(b.rows());
  for (std::size_t i = 0; i < degree; ++i) {
    if (!is_integral(alpha[i])) throw Error("non-integral coefficient in matrix evaluation");
    Int c = numerator(alpha[i]);
    if (!c.is_zero()) {
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s) acc.at(r, s) -= c * power.at(r, s);
    }
    if (i + 1 < degree) power = power * b;
  }
  return acc;
}

std::string MonicPolynomial::text() const {
  if (degree == 0) return "1";
  std::string out;
  auto monomial = [](std::size_t e) {
    if (e == 0) return std::string();
    if (e == 1) return std::string("x");
    return "x^" + std::to_string(e);
  };
  out += monomial(degree);
  for (std::size_t i = degree; i-- > 0;) {
    const Rat& a = alpha[i];
    if (a == 0) continue;
    // m(x) carries -alpha_i x^i, so positive alpha prints with a minus.
    Rat mag = a < 0 ? Rat(-a) : a;
    out += a < 0 ? " + " : " - ";
    std::string coeff = to_decimal(mag);
    if (coeff == "1" && i > 0)
      out += monomial(i);
    else
      out += i == 0 ? coeff : coeff + monomial(i);
  }
  return out;
}

namespace {

struct EchelonRow {
  std::size_t pivot;
  std::vector<Rat> values;  // length N, values[pivot] != 0
  std::vector<Rat> combo;   // expression of this row in Krylov vectors v_0..v_k
};

std::vector<Rat> flatten(const IntMatrix& m) {
  std::vector<Rat> out;
  out.reserve(m.flat().size());
  for (const Int& v : m.flat()) out.emplace_back(v);
  return out;
}

}  // namespace

MonicPolynomial minimal_polynomial(const IntMatrix& b) {
  if (b.rows() != b.cols()) throw DimensionMismatch("minimal polynomial of a non-square matrix");
  const std::size_t m = b.rows();
  const std::size_t n2 = m * m;

  // Degree 0 only for the empty matrix: m(x) = 1 annihilates it vacuously.
  if (m == 0) return MonicPolynomial{};

  std::vector<EchelonRow> basis;
  IntMatrix power = IntMatrix::identity(m);
  for (std::size_t k = 0;; ++k) {
    assert(k <= m);
    std::vector<Rat> row = flatten(power);
    std::vector<Rat> combo(k + 1);
    combo[k] = 1;

    for (const EchelonRow& er : basis) {
      const Rat& lead = row[er.pivot];
      if (lead == 0) continue;
      Rat factor = lead / er.values[er.pivot];
      for (std::size_t c = 0; c < n2; ++c)
        if (er.values[c] != 0) row[c] -= factor * er.values[c];
      for (std::size_t c = 0; c < er.combo.size(); ++c) combo[c] -= factor * er.combo[c];
    }

    std::size_t pivot = n2;
    for (std::size_t c = 0; c < n2; ++c)
      if (row[c] != 0) {
        pivot = c;
        break;
      }

    if (pivot == n2) {
      // v_k = -sum combo[i] v_i for i < k, i.e. B^k = sum alpha_i B^i.
      MonicPolynomial poly;
      poly.degree = k;
      poly.alpha.resize(k);
      for (std::size_t i = 0; i < k; ++i) poly.alpha[i] = -combo[i];
      return poly;
    }

    basis.push_back(EchelonRow{pivot, std::move(row), std::move(combo)});
    power = power * b;
  }
}

}  // namespace linedig
