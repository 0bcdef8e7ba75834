#include <doctest.h>

#include <random>

#include "ccc/clique.hpp"
#include "ccc/error.hpp"
#include "ccc/verify.hpp"
#include "oracles.hpp"

using namespace ccc;

namespace {

std::vector<std::uint32_t> weights_of(const Composition& c) { return {c.weights().begin(), c.weights().end()}; }

}  // namespace

TEST_CASE("minimum distance examples") {
  const std::vector<Word> cyclic{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CHECK(exact_min_distance(cyclic) == 3);
  const std::vector<Word> close{{0, 1, 2}, {0, 2, 1}, {2, 1, 0}};
  CHECK(exact_min_distance(close) == 2);
  CHECK(exact_min_distance(close, 4) == 2);
  try {
    exact_min_distance(std::vector<Word>{{0, 1}});
    FAIL("expected TooFewWords");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooFewWords);
  }
  try {
    exact_min_distance(std::vector<Word>{{0, 1}, {0, 1, 2}});
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLengthMismatch);
  }
}

TEST_CASE("minimum distance against pairwise oracle on random codes") {
  std::mt19937 rng(17);
  const Composition c(3, {3, 3, 2});
  const auto space = oracle::all_words(3, weights_of(c));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Word> code;
    const std::size_t size = 2 + rng() % 40;
    for (std::size_t i = 0; i < size; ++i) code.push_back(space[rng() % space.size()]);
    std::size_t expected = 99;
    for (std::size_t i = 0; i < code.size(); ++i) {
      for (std::size_t j = i + 1; j < code.size(); ++j) {
        std::size_t d = 0;
        for (std::size_t t = 0; t < code[i].size(); ++t) d += code[i][t] != code[j][t];
        expected = std::min(expected, d);
      }
    }
    CHECK(exact_min_distance(code, 1 + trial % 3) == expected);
  }
}

TEST_CASE("check composition and verify_code") {
  const Composition c(3, {1, 1, 1});
  CHECK(check_composition(std::vector<Word>{{0, 1, 2}, {2, 1, 0}}, c));
  CHECK_FALSE(check_composition(std::vector<Word>{{0, 1, 1}}, c));

  const auto v = verify_code({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, c);
  CHECK(v.size() == 3);
  CHECK(v.min_distance == std::size_t{3});
  CHECK_FALSE(verify_code({{0, 1, 2}}, c).min_distance.has_value());
  CHECK_THROWS_AS(verify_code({{0, 1, 2}, {0, 1, 2}}, c), Error);
  CHECK_THROWS_AS(verify_code({{0, 1, 1}}, c), Error);
}

TEST_CASE("maximum clique on small graphs") {
  BitGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  CHECK(maximum_clique(g) == std::vector<std::size_t>{0, 1, 2});
  CHECK(maximum_clique(BitGraph(3)).size() == 1);
}

TEST_CASE("exact maximum code against the subset oracle") {
  for (std::uint32_t q = 2; q <= 4; ++q) {
    for (std::uint32_t n = 1; n <= 6; ++n) {
      for (const auto& c : all_compositions(q, n)) {
        const auto space = oracle::all_words(q, weights_of(c));
        if (space.size() > 20) continue;
        for (std::uint32_t d = 1; d <= n + 1; ++d) {
          CAPTURE(c.to_string());
          CAPTURE(d);
          const auto best = exact_max_code(c, d);
          CHECK(best.size == oracle::max_code_by_subsets(space, d));
          CHECK(best.witness.size() == best.size);
          CHECK(check_composition(best.witness, c));
          CHECK(std::is_sorted(best.witness.begin(), best.witness.end()));
          if (best.witness.size() >= 2) CHECK(exact_min_distance(best.witness) >= d);
        }
      }
    }
  }
}

TEST_CASE("exact maximum code at distance 1 is the whole space") {
  for (const auto& c : all_compositions(3, 5)) CHECK(BigInt(exact_max_code(c, 1).size) == multinomial(c));
  CHECK(exact_max_code(Composition(3, {1, 1, 1}), 3).size == 3);
}

TEST_CASE("exact maximum code refuses large instances") {
  try {
    exact_max_code(Composition(3, {4, 4, 4}), 3, OracleOptions{100});
    FAIL("expected InstanceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInstanceTooLarge);
  }
}
