#include "ccc/construction.hpp"

#include <algorithm>
#include <thread>

#include "ccc/error.hpp"
#include "parallel.hpp"

namespace ccc {

std::uint32_t mu(std::uint32_t p, std::uint32_t e) {
  if (p == 0 || e == 0) throw Error(ErrorCode::kInvalidParams, "mu needs p >= 2 and e >= 1");
  return e % p == 0 ? e : e - 1;
}

void ConstructionParams::validate() const {
  const std::uint32_t r = field.order();
  if (comp.q() != q) {
    throw Error(ErrorCode::kInvalidParams, "composition has " + std::to_string(comp.q()) +
                                               " entries but q=" + std::to_string(q));
  }
  if (q > r) {
    throw Error(ErrorCode::kInvalidParams, "q must satisfy q <= r (got q=" + std::to_string(q) +
                                               ", r=" + std::to_string(r) + ")");
  }
  if (comp.n() != r) {
    throw Error(ErrorCode::kInvalidParams,
                "composition length n=" + std::to_string(comp.n()) + " must equal r=" +
                    std::to_string(r));
  }
  if (d0 < 1 || d0 + 2 > r) {
    throw Error(ErrorCode::kInvalidParams, "d0 must satisfy 1 <= d0 <= r-2 (got d0=" +
                                               std::to_string(d0) + ", r=" + std::to_string(r) +
                                               ")");
  }
}

CosetRep pi_image(std::span<const Symbol> word, const ConstructionParams& params) {
  const Field& f = params.field;
  if (word.size() != f.order()) {
    throw Error(ErrorCode::kInvalidLength, "word length " + std::to_string(word.size()) +
                                               " differs from r=" + std::to_string(f.order()));
  }
  ResiduePoly product = ResiduePoly::one(f, params.d0);
  for (std::uint32_t i = 1; i < f.order(); ++i) {
    const Symbol c = word[i - 1];
    if (c == 0) continue;
    product = ring_mul(product, ring_pow(ResiduePoly::x_minus(f.element(i), params.d0), c));
  }
  return canonical_rep(product);
}

std::optional<std::uint32_t> guaranteed_distance(std::uint32_t p, std::uint32_t q, std::uint32_t d0) {
  if (p >= q) return mu(p, d0) + 2;
  if (p == 2 && q == 3 && d0 == 2) return 3;
  return std::nullopt;
}

std::optional<std::uint32_t> guaranteed_distance(const ConstructionParams& params) {
  return guaranteed_distance(params.field.characteristic(), params.q, params.d0);
}

BigInt pigeonhole_size(const ConstructionParams& params) {
  BigInt group = 1;
  for (std::uint32_t j = 1; j < params.d0; ++j) group *= params.field.order();
  return ceil_div(multinomial(params.comp), group);
}

PiMap::PiMap(const ConstructionParams& params)
    : r_(params.field.order()),
      m_(params.d0),
      group_order_(quotient_order(params.field, params.d0)),
      q_(params.q) {
  params.validate();
  if (r_ > 1024) throw Error(ErrorCode::kInstanceTooLarge, "lookup tables need r <= 1024");
  const Field& f = params.field;
  add_.resize(std::size_t{r_} * r_);
  mul_.resize(std::size_t{r_} * r_);
  inv_.assign(r_, 0);
  for (std::uint32_t a = 0; a < r_; ++a) {
    for (std::uint32_t b = 0; b < r_; ++b) {
      add_[a * r_ + b] = static_cast<std::uint16_t>(f.add_index(a, b));
      mul_[a * r_ + b] = static_cast<std::uint16_t>(f.mul_index(a, b));
    }
  }
  for (std::uint32_t a = 1; a < r_; ++a) inv_[a] = static_cast<std::uint16_t>(inv(f.element(a)).index());

  powers_.assign(std::size_t{r_ - 1} * q_ * m_, 0);
  for (std::uint32_t i = 1; i < r_; ++i) {
    const ResiduePoly base = ResiduePoly::x_minus(f.element(i), m_);
    ResiduePoly acc = ResiduePoly::one(f, m_);
    for (std::uint32_t c = 0; c < q_; ++c) {
      for (std::uint32_t j = 0; j < m_; ++j) {
        powers_[((i - 1) * q_ + c) * m_ + j] = static_cast<std::uint16_t>(acc[j].index());
      }
      acc = ring_mul(acc, base);
    }
  }
}

std::uint64_t PiMap::ordinal(std::span<const Symbol> word) const {
  if (word.size() != r_) throw Error(ErrorCode::kInvalidLength, "word length differs from r");
  std::vector<std::uint16_t> acc(m_, 0), next(m_, 0);
  acc[0] = 1;
  for (std::uint32_t i = 0; i + 1 < r_; ++i) {
    const Symbol c = word[i];
    if (c == 0) continue;
    const std::uint16_t* factor = &powers_[(std::size_t{i} * q_ + c) * m_];
    std::fill(next.begin(), next.end(), 0);
    for (std::uint32_t a = 0; a < m_; ++a) {
      if (acc[a] == 0) continue;
      const std::uint16_t* row = &mul_[std::size_t{acc[a]} * r_];
      for (std::uint32_t b = 0; a + b < m_; ++b) {
        next[a + b] = add_[std::size_t{next[a + b]} * r_ + row[factor[b]]];
      }
    }
    acc.swap(next);
  }
  const std::uint16_t* scale = &mul_[std::size_t{inv_[acc[0]]} * r_];
  std::uint64_t out = 0;
  for (std::uint32_t j = 1; j < m_; ++j) out = out * r_ + scale[acc[j]];
  return out;
}

std::vector<std::uint64_t> coset_histogram(const ConstructionParams& params, unsigned threads) {
  const PiMap pi(params);
  const std::uint64_t total = space_size(params.comp);
  const auto ranges = detail::split_range(total, threads);
  std::vector<std::vector<std::uint64_t>> partial(ranges.size(),
                                                  std::vector<std::uint64_t>(pi.group_order(), 0));
  detail::run_parallel(ranges.size(), [&](std::size_t w) {
    auto& counts = partial[w];
    for (WordStream s(params.comp, ranges[w].first, ranges[w].second); !s.done(); s.advance()) {
      ++counts[pi.ordinal(s.word())];
    }
  });
  std::vector<std::uint64_t> counts(pi.group_order(), 0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
  }
  return counts;
}

ConstructedCode build_code(const ConstructionParams& params, unsigned threads) {
  params.validate();
  std::vector<std::uint64_t> counts = coset_histogram(params, threads);
  // max_element returns the first maximum, i.e. the smallest ordinal.
  const auto winner = static_cast<std::uint64_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());

  const PiMap pi(params);
  const auto ranges = detail::split_range(space_size(params.comp), threads);
  std::vector<std::vector<Word>> fibers(ranges.size());
  detail::run_parallel(ranges.size(), [&](std::size_t w) {
    for (WordStream s(params.comp, ranges[w].first, ranges[w].second); !s.done(); s.advance()) {
      if (pi.ordinal(s.word()) == winner) fibers[w].push_back(s.word());
    }
  });

  std::vector<Word> words;
  words.reserve(counts[winner]);
  for (auto& part : fibers) {
    for (auto& w : part) words.push_back(std::move(w));
  }
  return ConstructedCode{params,
                         std::move(words),
                         coset_from_ordinal(params.field, params.d0, winner),
                         guaranteed_distance(params),
                         std::nullopt,
                         std::move(counts)};
}

}  // namespace ccc
