#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linedig/matrix.hpp"
#include "linedig/numeric.hpp"

namespace linedig {

using Arc = std::pair<std::size_t, std::size_t>;  // (tail, head)

inline constexpr std::size_t kDefaultVertexBudget = 1'000'000;

/// Finite digraph with loops and parallel arcs. Immutable after
/// construction; the arc list is kept sorted lexicographically so that
/// structurally equal digraphs compare equal. Optional per-vertex labels
/// (walk words for the Kautz families) are carried for debugging and
/// export but excluded from equality.
class Digraph {
 public:
  Digraph() = default;

  /// Validates every endpoint against [0, n) and normalizes the arc order.
  /// Throws IndexOutOfRange on a bad endpoint, DimensionMismatch when the
  /// label list does not cover every vertex.
  Digraph(std::size_t n, std::vector<Arc> arcs, std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Out-degree / in-degree counting arc multiplicity.
  std::size_t out_degree(std::size_t v) const;
  std::size_t in_degree(std::size_t v) const;

  /// Labels do not participate: two digraphs are equal iff they have the
  /// same vertex count and the same arc multiset.
  bool operator==(const Digraph& rhs) const {
    return n_ == rhs.n_ && arcs_ == rhs.arcs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::string> labels_;
};

/// Normalizing constructor, spelled as an operation for symmetry with the
/// rest of the API.
Digraph build_digraph(std::size_t n, std::vector<Arc> arcs,
                      std::vector<std::string> labels = {});

/// n x n matrix whose (u,v) entry is the number of arcs u -> v.
IntMatrix adjacency_matrix(const Digraph& g);

/// Line digraph L(G): one vertex per arc of G (parallel arcs stay distinct
/// objects), and an arc from a=(u,v) to b=(w,z) exactly when v=w. A loop
/// satisfies the rule against itself and yields a loop. When G carries
/// labels the new vertices get walk labels "tail-walk|last head step".
/// Throws SizeLimitExceeded when |E(G)| exceeds the vertex budget.
Digraph line_digraph(const Digraph& g, std::size_t vertex_budget = kDefaultVertexBudget);

/// L^k(G) with L^0(G) = G.
Digraph iterate_line_digraph(const Digraph& g, unsigned long k,
                             std::size_t vertex_budget = kDefaultVertexBudget);

/// Number of k-walks j A^k j^T, which equals |V(L^k(G))|. Exact for any k.
Int order_bruteforce(const Digraph& g, unsigned long k);

/// The common in/out degree d when G is d-regular (multiplicities counted),
/// nullopt otherwise.
std::optional<std::size_t> regular_degree(const Digraph& g);

}  // namespace linedig
