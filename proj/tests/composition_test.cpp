#include <doctest.h>

#include <random>
#include <set>

#include "ccc/composition.hpp"
#include "ccc/error.hpp"
#include "oracles.hpp"

using namespace ccc;

namespace {

std::vector<Word> stream_all(const Composition& c) {
  std::vector<Word> out;
  for_each_word(c, [&](const Word& w) { out.push_back(w); });
  return out;
}

}  // namespace

TEST_CASE("multinomial against factorial oracle") {
  CHECK(multinomial(std::vector<std::uint32_t>{3, 0, 0}) == 1);
  CHECK(multinomial(std::vector<std::uint32_t>{3, 3, 2}) == 560);
  CHECK(multinomial(std::vector<std::uint32_t>{3, 3, 3}) == 1680);
  CHECK(oracle::multinomial({3, 3, 2}) == 560);
  CHECK(oracle::multinomial({3, 3, 3}) == 1680);
  for (const auto& c : all_compositions(4, 9)) {
    const std::vector<std::uint32_t> w(c.weights().begin(), c.weights().end());
    CHECK(multinomial(c) == oracle::multinomial(w));
  }
  const std::vector<std::uint32_t> big{20, 20, 20, 20};
  CHECK(multinomial(big) == oracle::multinomial(big));
}

TEST_CASE("composition parsing and validation") {
  const auto c = Composition::parse("3,3,2");
  CHECK(c.q() == 3);
  CHECK(c.n() == 8);
  CHECK(c.to_string() == "3,3,2");
  CHECK_THROWS_AS(Composition::parse("3,x"), Error);
  CHECK_THROWS_AS(Composition::parse("4"), Error);
  CHECK_THROWS_AS(Composition(3, {1, 1}), Error);
  try {
    Composition(1, {2});
    FAIL("expected InvalidComposition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidComposition);
  }
}

TEST_CASE("all compositions") {
  // Stars and bars: C(n + q - 1, q - 1).
  CHECK(all_compositions(3, 4).size() == 15);
  CHECK(all_compositions(2, 5).size() == 6);
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& c : all_compositions(3, 4)) {
    CHECK(c.n() == 4);
    seen.insert({c.weights().begin(), c.weights().end()});
  }
  CHECK(seen.size() == 15);
}

TEST_CASE("enumeration order examples") {
  const auto words = stream_all(Composition(2, {1, 1}));
  REQUIRE(words.size() == 2);
  CHECK(format_word(words[0]) == "01");
  CHECK(format_word(words[1]) == "10");

  const auto w3 = stream_all(Composition(3, {1, 1, 1}));
  std::vector<std::string> s;
  for (const auto& w : w3) s.push_back(format_word(w));
  CHECK(s == std::vector<std::string>{"012", "021", "102", "120", "201", "210"});

  CHECK(stream_all(Composition(3, {3, 0, 0})).size() == 1);
}

TEST_CASE("stream equals filtered oracle") {
  for (std::uint32_t q = 2; q <= 4; ++q) {
    for (std::uint32_t n = 1; n <= (q == 4 ? 5u : 7u); ++n) {
      for (const auto& c : all_compositions(q, n)) {
        const std::vector<std::uint32_t> w(c.weights().begin(), c.weights().end());
        const auto expected = oracle::all_words(q, w);
        const auto got = stream_all(c);
        CAPTURE(c.to_string());
        REQUIRE(got == expected);
        CHECK(space_size(c) == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
          CHECK(c.matches(got[i]));
          CHECK(rank_word(c, got[i]) == i);
          CHECK(unrank_word(c, i) == got[i]);
          if (i > 0) CHECK(got[i - 1] < got[i]);
        }
      }
    }
  }
}

TEST_CASE("split ranges concatenate to the full stream") {
  std::mt19937 rng(11);
  const Composition c(3, {3, 3, 3});
  const auto full = stream_all(c);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint64_t> cuts{0, full.size()};
    for (int i = 0; i < 4; ++i) cuts.push_back(rng() % (full.size() + 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<Word> joined;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      for (WordStream s(c, cuts[i], cuts[i + 1]); !s.done(); s.advance()) {
        CHECK(s.rank() == joined.size());
        joined.push_back(s.word());
      }
    }
    CHECK(joined == full);
  }
}

TEST_CASE("hamming distance") {
  const Word a{0, 1, 2}, b{0, 2, 1}, c{2, 1, 0};
  CHECK(hamming(a, a) == 0);
  CHECK(hamming(a, b) == 2);
  CHECK(hamming(a, c) == 2);
  CHECK(hamming(b, c) == 3);
  try {
    hamming(Word{0, 1}, Word{0, 1, 2});
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLengthMismatch);
  }

  const auto words = stream_all(Composition(3, {2, 2, 1}));
  for (const auto& u : words) {
    for (const auto& v : words) {
      CHECK(hamming(u, v) == hamming(v, u));
      CHECK((hamming(u, v) == 0) == (u == v));
      CHECK(hamming(u, v) != 1);  // constant composition
    }
  }
  std::mt19937 rng(3);
  for (int t = 0; t < 500; ++t) {
    const auto& u = words[rng() % words.size()];
    const auto& v = words[rng() % words.size()];
    const auto& w = words[rng() % words.size()];
    CHECK(hamming(u, w) <= hamming(u, v) + hamming(v, w));
  }
}

TEST_CASE("space size over budget") {
  try {
    space_size(Composition(10, std::vector<std::uint32_t>(10, 5)));
    FAIL("expected InstanceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInstanceTooLarge);
  }
}
