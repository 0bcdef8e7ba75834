#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccc/numeric.hpp"

namespace ccc {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

/// Symbol multiplicities [w_0, ..., w_{q-1}] of a length-n word, n = sum w_i.
class Composition {
 public:
  Composition(std::uint32_t q, std::vector<std::uint32_t> weights);

  /// Parses "3,3,2"; q is the number of entries.
  static Composition parse(std::string_view text);

  std::uint32_t q() const { return static_cast<std::uint32_t>(weights_.size()); }
  std::uint32_t n() const { return n_; }
  std::span<const std::uint32_t> weights() const { return weights_; }
  std::uint32_t weight(std::uint32_t symbol) const { return weights_[symbol]; }

  bool matches(std::span<const Symbol> word) const;

  /// The lexicographically first word: all 0s, then all 1s, ...
  Word first_word() const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<std::uint32_t> weights_;
  std::uint32_t n_ = 0;
};

/// Every composition of n into q nonnegative parts, in lexicographic order.
std::vector<Composition> all_compositions(std::uint32_t q, std::uint32_t n);

/// (sum parts)! / prod(parts!), exact.
BigInt multinomial(std::span<const std::uint32_t> parts);
inline BigInt multinomial(const Composition& comp) { return multinomial(comp.weights()); }

/// multinomial(comp) as a 64-bit count; throws InstanceTooLarge when it does not fit.
std::uint64_t space_size(const Composition& comp);

/// Lexicographic rank of a word within its composition class, and the inverse.
std::uint64_t rank_word(const Composition& comp, std::span<const Symbol> word);
Word unrank_word(const Composition& comp, std::uint64_t rank);

/// Streams the words of a composition in lexicographic order, optionally over
/// the rank range [begin, end). Holds only the current word.
class WordStream {
 public:
  explicit WordStream(const Composition& comp);
  WordStream(const Composition& comp, std::uint64_t begin, std::uint64_t end);

  bool done() const { return rank_ >= end_; }
  const Word& word() const { return word_; }
  std::uint64_t rank() const { return rank_; }
  void advance();

 private:
  Word word_;
  std::uint64_t rank_ = 0;
  std::uint64_t end_ = 0;
};

template <class F>
void for_each_word(const Composition& comp, F&& f) {
  for (WordStream s(comp); !s.done(); s.advance()) f(s.word());
}

std::size_t hamming(std::span<const Symbol> u, std::span<const Symbol> v);

/// Digits '0'..'9' for q <= 10.
std::string format_word(std::span<const Symbol> word);

}  // namespace ccc
