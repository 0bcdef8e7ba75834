#include "ccc/clique.hpp"

#include <algorithm>
#include <bit>

namespace ccc {

BitGraph::BitGraph(std::size_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), bits_(n_ * words_, 0) {}

void BitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool BitGraph::adjacent(std::size_t u, std::size_t v) const {
  return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t first_set(const Bits& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(b[i]));
  }
  return b.size() * 64;
}

void reset(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

class Search {
 public:
  explicit Search(const BitGraph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    Bits all(g_.words_per_row(), 0);
    for (std::size_t v = 0; v < g_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    if (g_.size() > 0) expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy sequential coloring of the candidate set in index order. Vertices
  // come out grouped by color; colors[i] bounds the clique size reachable
  // from order[0..i].
  void color_sort(const Bits& candidates, std::vector<std::size_t>& order,
                  std::vector<std::size_t>& colors) const {
    Bits uncolored = candidates;
    std::size_t color = 0;
    while (any(uncolored)) {
      ++color;
      Bits available = uncolored;
      while (any(available)) {
        const std::size_t v = first_set(available);
        reset(available, v);
        reset(uncolored, v);
        const std::uint64_t* nb = g_.row(v);
        for (std::size_t w = 0; w < available.size(); ++w) available[w] &= ~nb[w];
        order.push_back(v);
        colors.push_back(color);
      }
    }
  }

  void expand(Bits candidates) {
    std::vector<std::size_t> order, colors;
    color_sort(candidates, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colors[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bits next(candidates.size());
      const std::uint64_t* nb = g_.row(v);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] = candidates[w] & nb[w];
      if (!any(next)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      reset(candidates, v);
    }
  }

  const BitGraph& g_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> maximum_clique(const BitGraph& graph) { return Search(graph).run(); }

}  // namespace ccc
