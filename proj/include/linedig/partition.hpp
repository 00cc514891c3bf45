#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linedig/digraph.hpp"
#include "linedig/matrix.hpp"

namespace linedig {

/// Vertex partition into contiguous nonempty cells 0..m-1, with the
/// cell-size vector s = (|V_1|,...,|V_m|).
class Partition {
 public:
  Partition() = default;

  /// From a per-vertex cell assignment. Throws PartitionMismatch when cell
  /// indices are not contiguous from 0 or a cell is empty.
  explicit Partition(std::vector<std::size_t> cell_of);

  /// From explicit cells; every vertex of [0, n) must occur exactly once.
  static Partition from_cells(std::size_t n, const std::vector<std::vector<std::size_t>>& cells);

  /// Single-cell partition of n vertices (n >= 1), or the empty partition.
  static Partition trivial(std::size_t n);

  std::size_t vertex_count() const { return cell_of_.size(); }
  std::size_t cell_count() const { return sizes_.size(); }
  std::size_t cell_of(std::size_t v) const { return cell_of_[v]; }
  const std::vector<std::size_t>& assignment() const { return cell_of_; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }

  /// s as exact integers, for quotient-side arithmetic.
  std::vector<Int> sizes_int() const;

  std::vector<std::vector<std::size_t>> cells() const;

  bool operator==(const Partition& rhs) const = default;

 private:
  std::vector<std::size_t> cell_of_;
  std::vector<std::size_t> sizes_;
};

/// n x m 0/1 membership matrix S, one 1 per row.
IntMatrix characteristic_matrix(const Partition& pi);

/// Outcome of the regularity check; on failure carries two vertices of one
/// cell whose out-arc counts into some cell differ.
struct RegularityWitness {
  std::size_t cell = 0;
  std::size_t vertex_a = 0;
  std::size_t vertex_b = 0;
  std::size_t target_cell = 0;
  std::size_t count_a = 0;
  std::size_t count_b = 0;
};

struct RegularityResult {
  bool regular = false;
  std::optional<RegularityWitness> witness;
  explicit operator bool() const { return regular; }
};

/// True iff all vertices of a cell have identical out-arc counts into every
/// cell (intersection numbers b_ij independent of the representative).
/// Throws PartitionMismatch when pi covers a different vertex count.
RegularityResult is_regular_partition(const Digraph& g, const Partition& pi);

/// The m x m quotient matrix B with b_ij = |G^+(u) cap V_j| for u in V_i.
/// Throws NotRegular when the partition is not regular.
IntMatrix quotient_matrix(const Digraph& g, const Partition& pi);

/// Lemma-style commutation test: S.B == A.S entrywise.
bool check_commutation(const IntMatrix& a, const IntMatrix& s, const IntMatrix& b);

/// Checks that for every vertex u in V_i the number of k-walks from u into
/// V_j equals (B^k)_ij. Throws NotRegular when pi is not regular.
bool walk_count_check(const Digraph& g, const Partition& pi, unsigned long k);

/// Coarsest regular partition by signature refinement: start from one cell
/// and split by the vector of out-arc counts into each current cell until a
/// fixpoint. Cells are numbered by their smallest vertex.
Partition coarsest_regular_partition(const Digraph& g);

}  // namespace linedig
