#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "ccc/error.hpp"
#include "ccc/residue_ring.hpp"

using namespace ccc;

namespace {

ResiduePoly poly(const Field& f, std::vector<std::uint32_t> idx) {
  return ResiduePoly::from_indices(f, idx);
}

std::vector<ResiduePoly> all_polys(const Field& f, std::size_t m) {
  std::vector<ResiduePoly> out;
  std::vector<std::uint32_t> idx(m, 0);
  while (true) {
    out.push_back(poly(f, idx));
    std::size_t i = 0;
    for (; i < m; ++i) {
      if (++idx[i] < f.order()) break;
      idx[i] = 0;
    }
    if (i == m) return out;
  }
}

}  // namespace

TEST_CASE("squares and cubes in GF(3)[x]/(x^m)") {
  const Field f = field_new(3, 1);
  CHECK(ring_mul(poly(f, {1, 1}), poly(f, {1, 1})) == poly(f, {1, 2}));
  CHECK(ring_pow(poly(f, {2, 1}), 2) == poly(f, {1, 1}));
  CHECK(ring_pow(ResiduePoly::x_minus(f.one(), 3), 3) == poly(f, {2, 0, 0}));
  CHECK(ResiduePoly::x_minus(f.one(), 3) == poly(f, {2, 1, 0}));
}

TEST_CASE("inverses") {
  const Field f3 = field_new(3, 1);
  CHECK(ring_inv(poly(f3, {1, 1})) == poly(f3, {1, 2}));

  const Field f7 = field_new(7, 1);
  CHECK(ring_inv(poly(f7, {2, 0, 0})) == poly(f7, {4, 0, 0}));

  try {
    ring_inv(poly(f3, {0, 1}));
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAUnit);
  }
}

TEST_CASE("canonical representatives") {
  const Field f3 = field_new(3, 1);
  CHECK(to_string(canonical_rep(poly(f3, {2, 1}))) == "1,2");
  CHECK(to_string(canonical_rep(poly(f3, {1, 2}))) == "1,2");
  CHECK(canonical_rep(poly(f3, {2, 0, 0})) == canonical_rep(ResiduePoly::one(f3, 3)));
  CHECK(canonical_rep(ResiduePoly::one(f3, 3)).ordinal() == 0);
  CHECK_THROWS_AS(canonical_rep(poly(f3, {0, 1})), Error);
}

TEST_CASE("mixed rings") {
  const Field f = field_new(5, 1);
  try {
    ring_add(ResiduePoly::one(f, 2), ResiduePoly::one(f, 3));
    FAIL("expected MixedRings");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMixedRings);
  }
  CHECK_THROWS_AS(ring_mul(ResiduePoly::one(f, 2), ResiduePoly::one(field_new(7, 1), 2)), Error);
}

TEST_CASE("unit group and quotient exhaustively") {
  for (auto [p, k, m] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 3u}, {2u, 2u, 3u}, {5u, 1u, 2u}, {3u, 2u, 2u},
                         {2u, 3u, 2u}}) {
    const Field f = field_new(p, k);
    const std::uint64_t r = f.order();
    const auto polys = all_polys(f, m);
    CAPTURE(f.describe());
    CAPTURE(m);

    std::uint64_t units = 0;
    std::map<std::uint64_t, std::set<std::vector<std::uint32_t>>> classes;
    for (const auto& a : polys) {
      if (!a.is_unit()) {
        CHECK_THROWS_AS(ring_inv(a), Error);
        continue;
      }
      ++units;
      CHECK(ring_mul(a, ring_inv(a)) == ResiduePoly::one(f, m));
      const auto rep = canonical_rep(a);
      CHECK(rep.poly()[0] == f.one());
      CHECK(rep.ordinal() < quotient_order(f, m));
      CHECK(coset_from_ordinal(f, m, rep.ordinal()) == rep);
      for (const auto& lambda : f.elements()) {
        if (!lambda.is_zero()) CHECK(canonical_rep(ring_scale(lambda, a)) == rep);
      }
      classes[rep.ordinal()].insert(a.indices());
    }
    // Oracle: units are polynomials with nonzero constant term.
    std::uint64_t expected_units = r - 1;
    for (std::uint32_t j = 1; j < m; ++j) expected_units *= r;
    CHECK(units == expected_units);
    CHECK(classes.size() == quotient_order(f, m));
    for (const auto& [ord, members] : classes) CHECK(members.size() == r - 1);

    // Ordinal order agrees with lexicographic order on representatives.
    for (std::uint64_t o = 1; o < quotient_order(f, m); ++o) {
      CHECK(coset_from_ordinal(f, m, o - 1) < coset_from_ordinal(f, m, o));
    }
  }
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937 rng(7);
  const Field f = field_new(3, 2);
  const std::size_t m = 4;
  auto random_poly = [&] {
    std::vector<std::uint32_t> idx(m);
    for (auto& i : idx) i = rng() % f.order();
    return poly(f, idx);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(ring_mul(a, b) == ring_mul(b, a));
    CHECK(ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c)));
    CHECK(ring_mul(a, ring_add(b, c)) == ring_add(ring_mul(a, b), ring_mul(a, c)));
    const std::uint64_t e1 = rng() % 20, e2 = rng() % 20;
    CHECK(ring_pow(a, e1 + e2) == ring_mul(ring_pow(a, e1), ring_pow(a, e2)));
    if (a.is_unit() && b.is_unit()) {
      CHECK(ring_inv(ring_mul(a, b)) == ring_mul(ring_inv(a), ring_inv(b)));
    }
  }
}

TEST_CASE("quotient order") {
  CHECK(quotient_order(field_new(3, 2), 3) == 81);
  CHECK(quotient_order(field_new(2, 3), 2) == 8);
  CHECK(quotient_order(field_new(7, 1), 1) == 1);
}
