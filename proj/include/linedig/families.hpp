#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linedig/digraph.hpp"
#include "linedig/matrix.hpp"
#include "linedig/partition.hpp"

namespace linedig {

/// Cyclic Kautz digraph CK(d,l): vertices are the words a_1..a_l over the
/// alphabet {0..d} with adjacent letters distinct and a_1 != a_l; there is
/// an arc from a_1..a_l to a_2..a_l a_{l+1} exactly when the shifted word
/// is again a vertex. Words are enumerated lexicographically and kept as
/// vertex labels. Requires d >= 1, l >= 2.
Digraph cyclic_kautz(unsigned degree, unsigned length);

/// Kautz digraph K(d,l): same words without the first/last restriction;
/// d-regular. Requires d >= 1, l >= 2.
Digraph kautz(unsigned degree, unsigned length);

/// Unicyclic digraph G_{n,d}: a directed n-cycle where every cycle vertex
/// feeds one tree center which feeds d leaves. Vertices are laid out as
/// cycle 0..n-1, centers n..2n-1, leaves 2n..2n+nd-1. Requires n >= 1.
Digraph unicyclic(unsigned cycle_length, unsigned leaf_count);

/// Directed cycle C_n. Requires n >= 1.
Digraph cycle(unsigned n);

/// Seeded Erdos-Renyi style digraph: every ordered pair (loops included)
/// independently carries an arc with probability arc_prob in [0,1].
/// Reproducible: draws come from std::mt19937_64 seeded as given, pairs
/// visited in row-major order, an arc is present iff the 64-bit draw falls
/// below floor(arc_prob * 2^64).
Digraph random_digraph(std::size_t n, const Rat& arc_prob, std::uint64_t seed);

/// The paper's three-cell partition of CK(2,4) by word shape, in the order
/// (abcb, abab, abac): second=last only, both pairs equal, first=third only.
Partition ck24_paper_partition();

/// Shape partition of CK(d,4) in the order (abab, abac, abcb, abcd) with
/// empty cells dropped; for d >= 3 this is the four-cell partition whose
/// quotient is the displayed CK(d,4) matrix, for d = 2 the abcd cell is
/// empty and the three remaining cells coincide with the paper partition.
Partition ckd4_shape_partition(unsigned degree);

/// The (cycle, centers, leaves) partition of unicyclic(n, d).
Partition unicyclic_paper_partition(unsigned cycle_length, unsigned leaf_count);

/// Count of ternary words of the given length with no factor xx and no
/// factor xyxy (length-2 squarefree), by depth-first enumeration with
/// prefix pruning. Throws SizeLimitExceeded past the configured cap.
Int squarefree_count(unsigned length, unsigned max_length = 20);

/// Closed-form order of L^k(CK(d,4)) evaluated in floating point, as a
/// cross-check only; exact values come from the recurrence. Requires d >= 2.
double ckd4_closed_form(unsigned degree, unsigned k);

/// A quotient known in advance: the cell-size vector (absent when the
/// source only prints the matrix) and the quotient matrix.
struct QuotientFixture {
  std::string name;
  std::optional<std::vector<Int>> sizes;
  IntMatrix matrix;
};

QuotientFixture fixture_ck24();
QuotientFixture fixture_ckd4(unsigned degree);                        // d >= 2
QuotientFixture fixture_unicyclic(unsigned cycle_length, unsigned leaf_count);
QuotientFixture fixture_acyclic6();  // 6x6 nilpotent quotient, no size vector

/// The four fixtures at their illustrated parameters:
/// ck24, ckd4(3), unicyclic(3,2), acyclic6.
std::vector<QuotientFixture> fixture_quotients();

/// Family spec strings for the CLI: "ck:d=2,l=4", "kautz:d=2,l=3",
/// "uni:n=3,d=2", "cycle:n=5", "rand:n=10,p=0.25,seed=42".
/// Throws ParseError on anything else.
Digraph digraph_from_spec(const std::string& spec);

}  // namespace linedig
