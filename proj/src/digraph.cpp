#include "linedig/digraph.hpp"

#include <algorithm>

#include "linedig/errors.hpp"

namespace linedig {

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs, std::vector<std::string> labels)
    : n_(n), arcs_(std::move(arcs)), labels_(std::move(labels)) {
  for (const auto& [tail, head] : arcs_) {
    if (tail >= n_ || head >= n_)
      throw IndexOutOfRange("arc (" + std::to_string(tail) + "," + std::to_string(head) +
                            ") outside vertex range [0," + std::to_string(n_) + ")");
  }
  if (!labels_.empty() && labels_.size() != n_)
    throw DimensionMismatch("label list must cover every vertex");
  std::sort(arcs_.begin(), arcs_.end());
}

std::size_t Digraph::out_degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& a : arcs_) d += a.first == v;
  return d;
}

std::size_t Digraph::in_degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& a : arcs_) d += a.second == v;
  return d;
}

Digraph build_digraph(std::size_t n, std::vector<Arc> arcs, std::vector<std::string> labels) {
  return Digraph(n, std::move(arcs), std::move(labels));
}

IntMatrix adjacency_matrix(const Digraph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& [tail, head] : g.arcs()) a.at(tail, head) += 1;
  return a;
}

namespace {

// Walk labels are '|'-separated vertex sequences. Appending one more step
// to the tail walk keeps the label a walk of the original digraph.
std::string walk_label(const std::string& tail_walk, const std::string& head_walk) {
  auto last = head_walk.rfind('|');
  return tail_walk + '|' +
         (last == std::string::npos ? head_walk : head_walk.substr(last + 1));
}

}  // namespace

Digraph line_digraph(const Digraph& g, std::size_t vertex_budget) {
  const auto& arcs = g.arcs();
  if (arcs.size() > vertex_budget)
    throw SizeLimitExceeded("line digraph would have " + std::to_string(arcs.size()) +
                            " vertices, budget " + std::to_string(vertex_budget));

  // Arc indices sharing a tail, in arc order; arcs are sorted, so the
  // produced arc list comes out lexicographically sorted as well.
  std::vector<std::vector<std::size_t>> by_tail(g.vertex_count());
  for (std::size_t i = 0; i < arcs.size(); ++i) by_tail[arcs[i].first].push_back(i);

  std::vector<Arc> out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j : by_tail[arcs[i].second]) out.emplace_back(i, j);
  }

  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(arcs.size());
    for (const auto& [tail, head] : arcs)
      labels.push_back(walk_label(g.labels()[tail], g.labels()[head]));
  }
  return Digraph(arcs.size(), std::move(out), std::move(labels));
}

Digraph iterate_line_digraph(const Digraph& g, unsigned long k, std::size_t vertex_budget) {
  Digraph current = g;
  for (unsigned long step = 0; step < k; ++step) current = line_digraph(current, vertex_budget);
  return current;
}

Int order_bruteforce(const Digraph& g, unsigned long k) {
  // j A^k j^T by repeated row-vector application; exact at any k.
  IntMatrix a = adjacency_matrix(g);
  std::vector<Int> v(g.vertex_count(), Int(1));
  for (unsigned long step = 0; step < k; ++step) v = a.row_apply(v);
  Int sum = 0;
  for (const Int& x : v) sum += x;
  return sum;
}

std::optional<std::size_t> regular_degree(const Digraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  std::vector<std::size_t> out(g.vertex_count(), 0), in(g.vertex_count(), 0);
  for (const auto& [tail, head] : g.arcs()) {
    ++out[tail];
    ++in[head];
  }
  std::size_t d = out[0];
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (out[v] != d || in[v] != d) return std::nullopt;
  return d;
}

}  // namespace linedig
