#include "ccc/composition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "ccc/error.hpp"

namespace ccc {

Composition::Composition(std::uint32_t q, std::vector<std::uint32_t> weights)
    : weights_(std::move(weights)) {
  if (q < 2) throw Error(ErrorCode::kInvalidComposition, "alphabet size q must be >= 2");
  if (q > std::numeric_limits<Symbol>::max() + 1u) {
    throw Error(ErrorCode::kInvalidComposition, "alphabet size q too large");
  }
  if (weights_.size() != q) {
    throw Error(ErrorCode::kInvalidComposition,
                "composition has " + std::to_string(weights_.size()) + " entries but q=" +
                    std::to_string(q));
  }
  std::uint64_t total = 0;
  for (auto w : weights_) total += w;
  if (total > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidComposition, "length overflow");
  }
  n_ = static_cast<std::uint32_t>(total);
}

Composition Composition::parse(std::string_view text) {
  std::vector<std::uint32_t> weights;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view part = text.substr(0, comma);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error(ErrorCode::kInvalidComposition,
                  "cannot parse composition entry '" + std::string(part) + "'");
    }
    weights.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  const auto q = static_cast<std::uint32_t>(weights.size());
  return Composition(q, std::move(weights));
}

bool Composition::matches(std::span<const Symbol> word) const {
  if (word.size() != n_) return false;
  std::vector<std::uint32_t> counts(weights_.size(), 0);
  for (auto s : word) {
    if (s >= counts.size()) return false;
    ++counts[s];
  }
  return counts == weights_;
}

Word Composition::first_word() const {
  Word w;
  w.reserve(n_);
  for (std::size_t s = 0; s < weights_.size(); ++s) w.insert(w.end(), weights_[s], static_cast<Symbol>(s));
  return w;
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out;
}

std::vector<Composition> all_compositions(std::uint32_t q, std::uint32_t n) {
  std::vector<Composition> out;
  std::vector<std::uint32_t> w(q, 0);
  // Depth-first over the first q-1 parts; the last part takes the remainder.
  auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t left) -> void {
    if (pos + 1 == q) {
      w[pos] = left;
      out.emplace_back(q, w);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      w[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

BigInt multinomial(std::span<const std::uint32_t> parts) {
  // Product of binomials C(w_0 + ... + w_i, w_i), each built incrementally so
  // every intermediate division is exact.
  BigInt result = 1;
  std::uint64_t running = 0;
  for (auto w : parts) {
    for (std::uint32_t j = 1; j <= w; ++j) {
      ++running;
      result *= running;
      result /= j;
    }
  }
  return result;
}

std::uint64_t space_size(const Composition& comp) {
  const BigInt m = multinomial(comp);
  if (m > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::kInstanceTooLarge, "composition space exceeds 2^64 words");
  }
  return static_cast<std::uint64_t>(m);
}

namespace {

// Counts of words starting with `symbol` given the remaining multiplicities.
std::uint64_t completions_after(std::vector<std::uint32_t>& left, std::size_t symbol) {
  --left[symbol];
  const BigInt c = multinomial(left);
  ++left[symbol];
  return static_cast<std::uint64_t>(c);
}

}  // namespace

std::uint64_t rank_word(const Composition& comp, std::span<const Symbol> word) {
  if (!comp.matches(word)) {
    throw Error(ErrorCode::kInvalidComposition, "word does not have the given composition");
  }
  std::vector<std::uint32_t> left(comp.weights().begin(), comp.weights().end());
  std::uint64_t rank = 0;
  for (auto s : word) {
    for (std::size_t smaller = 0; smaller < s; ++smaller) {
      if (left[smaller] > 0) rank += completions_after(left, smaller);
    }
    --left[s];
  }
  return rank;
}

Word unrank_word(const Composition& comp, std::uint64_t rank) {
  if (rank >= space_size(comp)) throw Error(ErrorCode::kInvalidParams, "rank out of range");
  std::vector<std::uint32_t> left(comp.weights().begin(), comp.weights().end());
  Word w;
  w.reserve(comp.n());
  for (std::uint32_t pos = 0; pos < comp.n(); ++pos) {
    for (std::size_t s = 0; s < left.size(); ++s) {
      if (left[s] == 0) continue;
      const std::uint64_t block = completions_after(left, s);
      if (rank < block) {
        w.push_back(static_cast<Symbol>(s));
        --left[s];
        break;
      }
      rank -= block;
    }
  }
  return w;
}

WordStream::WordStream(const Composition& comp)
    : word_(comp.first_word()), rank_(0), end_(space_size(comp)) {}

WordStream::WordStream(const Composition& comp, std::uint64_t begin, std::uint64_t end)
    : rank_(begin), end_(std::min(end, space_size(comp))) {
  if (rank_ < end_) word_ = unrank_word(comp, rank_);
}

void WordStream::advance() {
  ++rank_;
  if (rank_ < end_) std::next_permutation(word_.begin(), word_.end());
}

std::size_t hamming(std::span<const Symbol> u, std::span<const Symbol> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kLengthMismatch, "words have different lengths");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += (u[i] != v[i]);
  return d;
}

std::string format_word(std::span<const Symbol> word) {
  std::string out;
  out.reserve(word.size());
  for (auto s : word) out += static_cast<char>('0' + s);
  return out;
}

}  // namespace ccc
