#pragma once

#include <cstdint>
#include <vector>

namespace ccc {

/// Dense undirected graph stored as one adjacency bitset per vertex.
class BitGraph {
 public:
  explicit BitGraph(std::size_t vertices);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  const std::uint64_t* row(std::size_t v) const { return &bits_[v * words_]; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Exact maximum clique by branch and bound with greedy-coloring bounds
/// (bitset MCQ). Vertices are considered in index order, so the result is
/// deterministic. Returned vertices are sorted ascending.
std::vector<std::size_t> maximum_clique(const BitGraph& graph);

}  // namespace ccc
