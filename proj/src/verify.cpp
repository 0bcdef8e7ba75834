#include "ccc/verify.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ccc/clique.hpp"
#include "ccc/error.hpp"
#include "parallel.hpp"

namespace ccc {

std::size_t exact_min_distance(std::span<const Word> words, unsigned threads) {
  if (words.size() < 2) throw Error(ErrorCode::kTooFewWords, "minimum distance needs at least two words");
  const std::size_t n = words.front().size();
  for (const auto& w : words) {
    if (w.size() != n) throw Error(ErrorCode::kLengthMismatch, "words have different lengths");
  }
  const auto ranges = detail::split_range(words.size(), threads);
  std::vector<std::size_t> partial(ranges.size(), std::numeric_limits<std::size_t>::max());
  detail::run_parallel(ranges.size(), [&](std::size_t w) {
    std::size_t best = partial[w];
    for (std::size_t i = ranges[w].first; i < ranges[w].second; ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        best = std::min(best, hamming(words[i], words[j]));
      }
    }
    partial[w] = best;
  });
  return *std::min_element(partial.begin(), partial.end());
}

bool check_composition(std::span<const Word> words, const Composition& comp) {
  return std::all_of(words.begin(), words.end(), [&](const Word& w) { return comp.matches(w); });
}

VerifiedCode verify_code(std::vector<Word> words, const Composition& comp, unsigned threads) {
  if (!check_composition(words, comp)) {
    throw Error(ErrorCode::kInvalidParams, "a word does not match composition " + comp.to_string());
  }
  if (std::set<Word>(words.begin(), words.end()).size() != words.size()) {
    throw Error(ErrorCode::kInvalidParams, "code contains duplicate words");
  }
  std::optional<std::size_t> d;
  if (words.size() >= 2) d = exact_min_distance(words, threads);
  return VerifiedCode{std::move(words), comp, d};
}

MaxCode exact_max_code(const Composition& comp, std::uint32_t d, const OracleOptions& options) {
  const BigInt total = multinomial(comp);
  if (total > options.vertex_cap) {
    throw Error(ErrorCode::kInstanceTooLarge, "space has " + total.str() + " words, cap is " +
                                                  std::to_string(options.vertex_cap));
  }
  std::vector<Word> vertices;
  vertices.reserve(static_cast<std::size_t>(total));
  for_each_word(comp, [&](const Word& w) { vertices.push_back(w); });

  BitGraph graph(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (hamming(vertices[i], vertices[j]) >= d) graph.add_edge(i, j);
    }
  }
  MaxCode out;
  for (auto v : maximum_clique(graph)) out.witness.push_back(vertices[v]);
  out.size = out.witness.size();
  return out;
}

}  // namespace ccc
