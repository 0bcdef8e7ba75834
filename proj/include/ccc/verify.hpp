#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ccc/composition.hpp"

namespace ccc {

/// Minimum pairwise Hamming distance by full scan. Needs >= 2 words of one
/// length (TooFewWords / LengthMismatch otherwise). Rows are split across
/// `threads` workers and min-reduced.
std::size_t exact_min_distance(std::span<const Word> words, unsigned threads = 1);

bool check_composition(std::span<const Word> words, const Composition& comp);

struct VerifiedCode {
  std::vector<Word> words;
  Composition comp;
  std::optional<std::size_t> min_distance;  // only for two or more words
  std::size_t size() const { return words.size(); }
};

/// Checks distinctness and composition (InvalidParams on failure) and computes
/// the exact minimum distance.
VerifiedCode verify_code(std::vector<Word> words, const Composition& comp, unsigned threads = 1);

struct OracleOptions {
  std::uint64_t vertex_cap = 5000;
};

struct MaxCode {
  std::uint64_t size = 0;
  std::vector<Word> witness;  // lexicographic order
};

/// Largest subset of V_{n,comp}(q) with pairwise distance >= d, by maximum
/// clique on the compatibility graph. Throws InstanceTooLarge before building
/// the graph when the space exceeds the cap.
MaxCode exact_max_code(const Composition& comp, std::uint32_t d, const OracleOptions& options = {});

}  // namespace ccc
