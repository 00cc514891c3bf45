#include "linedig/partition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "linedig/errors.hpp"

namespace linedig {

Partition::Partition(std::vector<std::size_t> cell_of) : cell_of_(std::move(cell_of)) {
  std::size_t m = 0;
  for (std::size_t c : cell_of_) m = std::max(m, c + 1);
  sizes_.assign(m, 0);
  for (std::size_t c : cell_of_) ++sizes_[c];
  for (std::size_t i = 0; i < m; ++i)
    if (sizes_[i] == 0)
      throw PartitionMismatch("cell " + std::to_string(i) + " is empty");
}

Partition Partition::from_cells(std::size_t n, const std::vector<std::vector<std::size_t>>& cells) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cell_of(n, kUnassigned);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].empty()) throw PartitionMismatch("cell " + std::to_string(i) + " is empty");
    for (std::size_t v : cells[i]) {
      if (v >= n) throw IndexOutOfRange("partition names vertex " + std::to_string(v));
      if (cell_of[v] != kUnassigned)
        throw PartitionMismatch("vertex " + std::to_string(v) + " listed twice");
      cell_of[v] = i;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (cell_of[v] == kUnassigned)
      throw PartitionMismatch("vertex " + std::to_string(v) + " not covered");
  return Partition(std::move(cell_of));
}

Partition Partition::trivial(std::size_t n) {
  return Partition(std::vector<std::size_t>(n, 0));
}

std::vector<Int> Partition::sizes_int() const {
  std::vector<Int> s;
  s.reserve(sizes_.size());
  for (std::size_t v : sizes_) s.emplace_back(v);
  return s;
}

std::vector<std::vector<std::size_t>> Partition::cells() const {
  std::vector<std::vector<std::size_t>> out(cell_count());
  for (std::size_t v = 0; v < cell_of_.size(); ++v) out[cell_of_[v]].push_back(v);
  return out;
}

IntMatrix characteristic_matrix(const Partition& pi) {
  IntMatrix s(pi.vertex_count(), pi.cell_count());
  for (std::size_t v = 0; v < pi.vertex_count(); ++v) s.at(v, pi.cell_of(v)) = 1;
  return s;
}

namespace {

// Out-arc counts of every vertex into every cell, multiplicities included.
std::vector<std::vector<std::size_t>> out_counts(const Digraph& g, const Partition& pi) {
  std::vector<std::vector<std::size_t>> counts(g.vertex_count(),
                                               std::vector<std::size_t>(pi.cell_count(), 0));
  for (const auto& [tail, head] : g.arcs()) ++counts[tail][pi.cell_of(head)];
  return counts;
}

}  // namespace

RegularityResult is_regular_partition(const Digraph& g, const Partition& pi) {
  if (pi.vertex_count() != g.vertex_count())
    throw PartitionMismatch("partition covers " + std::to_string(pi.vertex_count()) +
                            " vertices, digraph has " + std::to_string(g.vertex_count()));
  auto counts = out_counts(g, pi);
  std::vector<std::size_t> representative(pi.cell_count(), static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::size_t cell = pi.cell_of(v);
    std::size_t rep = representative[cell];
    if (rep == static_cast<std::size_t>(-1)) {
      representative[cell] = v;
      continue;
    }
    for (std::size_t j = 0; j < pi.cell_count(); ++j) {
      if (counts[rep][j] != counts[v][j]) {
        RegularityResult r;
        r.regular = false;
        r.witness = RegularityWitness{cell, rep, v, j, counts[rep][j], counts[v][j]};
        return r;
      }
    }
  }
  return RegularityResult{true, std::nullopt};
}

IntMatrix quotient_matrix(const Digraph& g, const Partition& pi) {
  auto reg = is_regular_partition(g, pi);
  if (!reg) {
    const auto& w = *reg.witness;
    throw NotRegular("partition not regular: vertices " + std::to_string(w.vertex_a) + " and " +
                     std::to_string(w.vertex_b) + " of cell " + std::to_string(w.cell) +
                     " send " + std::to_string(w.count_a) + " vs " + std::to_string(w.count_b) +
                     " arcs into cell " + std::to_string(w.target_cell));
  }
  auto counts = out_counts(g, pi);
  IntMatrix b(pi.cell_count(), pi.cell_count());
  std::vector<bool> seen(pi.cell_count(), false);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::size_t i = pi.cell_of(v);
    if (seen[i]) continue;
    seen[i] = true;
    for (std::size_t j = 0; j < pi.cell_count(); ++j) b.at(i, j) = counts[v][j];
  }
  return b;
}

bool check_commutation(const IntMatrix& a, const IntMatrix& s, const IntMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw DimensionMismatch("commutation check needs square A and B");
  if (s.rows() != a.rows() || s.cols() != b.rows())
    throw DimensionMismatch("characteristic matrix shape does not match A and B");
  return s * b == a * s;
}

bool walk_count_check(const Digraph& g, const Partition& pi, unsigned long k) {
  auto reg = is_regular_partition(g, pi);
  if (!reg) throw NotRegular("walk_count_check requires a regular partition");
  IntMatrix ak = mat_pow(adjacency_matrix(g), k);
  IntMatrix bk = mat_pow(quotient_matrix(g, pi), k);
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    std::vector<Int> into_cell(pi.cell_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) into_cell[pi.cell_of(v)] += ak.at(u, v);
    for (std::size_t j = 0; j < pi.cell_count(); ++j)
      if (into_cell[j] != bk.at(pi.cell_of(u), j)) return false;
  }
  return true;
}

Partition coarsest_regular_partition(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return Partition();

  std::vector<std::size_t> cell_of(n, 0);
  std::size_t m = 1;
  while (true) {
    // Signature of a vertex: its current cell plus the out-arc counts into
    // every current cell. Splitting by signature refines toward the
    // out-equitable fixpoint.
    std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(m, 0));
    for (const auto& [tail, head] : g.arcs()) ++counts[tail][cell_of[head]];

    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> next_cell;
    std::vector<std::size_t> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto key = std::make_pair(cell_of[v], counts[v]);
      next[v] = next_cell.try_emplace(key, next_cell.size()).first->second;
    }
    if (next_cell.size() == m) break;
    m = next_cell.size();
    cell_of = std::move(next);
  }

  // Renumber cells by smallest contained vertex for a canonical result.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> rank(m, kUnset);
  std::size_t fresh = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (rank[cell_of[v]] == kUnset) rank[cell_of[v]] = fresh++;
  for (std::size_t v = 0; v < n; ++v) cell_of[v] = rank[cell_of[v]];
  return Partition(std::move(cell_of));
}

}  // namespace linedig
