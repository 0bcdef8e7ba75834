#include <doctest.h>

#include "ccc/error.hpp"
#include "ccc/field.hpp"

using namespace ccc;

namespace {

// A cubic over GF(p) is irreducible iff it has no root.
bool cubic_has_root(std::uint32_t p, const PrimePoly& f) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0, xp = 1;
    for (auto c : f) {
      v = (v + c * xp) % p;
      xp = xp * x % p;
    }
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("prime field construction") {
  const Field f = field_new(7, 1);
  CHECK(f.order() == 7);
  CHECK(f.characteristic() == 7);
  CHECK(f.params().modulus == PrimePoly{0, 1});
}

TEST_CASE("default modulus for GF(8) is x^3+x+1") {
  // Oracle: scan the 8 monic cubics in base-2 index order, keep the first with
  // no root over GF(2).
  PrimePoly expected;
  for (std::uint32_t idx = 0; idx < 8 && expected.empty(); ++idx) {
    PrimePoly cand{idx & 1u, (idx >> 1) & 1u, (idx >> 2) & 1u, 1};
    if (!cubic_has_root(2, cand)) expected = cand;
  }
  REQUIRE(expected == PrimePoly{1, 1, 0, 1});
  CHECK(field_new(2, 3).params().modulus == expected);
}

TEST_CASE("user modulus") {
  SUBCASE("x^2+1 over GF(3) has no root and is accepted") {
    const Field f = field_new(3, 2, PrimePoly{1, 0, 1});
    CHECK(f.order() == 9);
    CHECK(f.params().modulus == PrimePoly{1, 0, 1});
  }
  SUBCASE("x^2+2 = (x+1)(x+2) over GF(3) is rejected") {
    CHECK_THROWS_AS(field_new(3, 2, PrimePoly{2, 0, 1}), Error);
    try {
      field_new(3, 2, PrimePoly{2, 0, 1});
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kReducibleModulus);
    }
  }
  SUBCASE("non-monic or wrong degree") {
    CHECK_THROWS_AS(field_new(3, 2, PrimePoly{1, 0, 2}), Error);
    CHECK_THROWS_AS(field_new(3, 2, PrimePoly{1, 1}), Error);
  }
}

TEST_CASE("non-prime characteristic") {
  try {
    field_new(6, 1);
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotPrime);
  }
}

TEST_CASE("arithmetic examples") {
  const Field f3 = field_new(3, 1);
  CHECK(f3.element(2) + f3.element(2) == f3.element(1));

  const Field f8 = field_new(2, 3);
  const auto x = f8.from_coeffs(std::vector<std::uint32_t>{0, 1});
  const auto x2 = f8.from_coeffs(std::vector<std::uint32_t>{0, 0, 1});
  CHECK(x * x2 == f8.from_coeffs(std::vector<std::uint32_t>{1, 1}));  // x^3 = x + 1
  CHECK(inv(x) == f8.from_coeffs(std::vector<std::uint32_t>{1, 0, 1}));

  const Field f7 = field_new(7, 1);
  CHECK(inv(f7.element(3)) == f7.element(5));

  const Field f9 = field_new(3, 2);
  CHECK(inv(f9.one()) == f9.one());
  for (const auto& a : f9.elements()) CHECK(a + f9.zero() == a);
}

TEST_CASE("inverse of zero") {
  const Field f = field_new(5, 1);
  try {
    inv(f.zero());
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDivisionByZero);
  }
}

TEST_CASE("mixed fields") {
  const Field a = field_new(3, 1);
  const Field b = field_new(5, 1);
  try {
    (void)(a.one() + b.one());
    FAIL("expected MixedFields");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMixedFields);
  }
  // Separately constructed but identical fields interoperate.
  CHECK(field_new(3, 2).one() + field_new(3, 2).one() == field_new(3, 2).element(2));
}

TEST_CASE("enumeration order") {
  const Field f3 = field_new(3, 1);
  const auto e3 = enumerate(f3);
  REQUIRE(e3.size() == 3);
  for (std::uint32_t i = 0; i < 3; ++i) CHECK(e3[i].index() == i);

  const Field f4 = field_new(2, 2);
  const auto e4 = enumerate(f4);
  REQUIRE(e4.size() == 4);
  CHECK(e4[0].coeffs() == std::vector<std::uint32_t>{0, 0});
  CHECK(e4[1].coeffs() == std::vector<std::uint32_t>{1, 0});
  CHECK(e4[2].coeffs() == std::vector<std::uint32_t>{0, 1});  // x
  CHECK(e4[3].coeffs() == std::vector<std::uint32_t>{1, 1});  // x + 1
  CHECK(to_string(e4[3]) == "x+1");

  CHECK(enumerate(field_new(3, 2)).size() == 9);
}

TEST_CASE("field axioms hold exhaustively for small fields") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {2u, 3u}, {3u, 2u},
                      {2u, 4u}, {13u, 1u}}) {
    const Field f = field_new(p, k);
    const auto el = f.elements();
    CAPTURE(f.describe());
    for (const auto& a : el) {
      CHECK(a + neg(a) == f.zero());
      CHECK(a * f.one() == a);
      if (!a.is_zero()) {
        CHECK(a * inv(a) == f.one());
        CHECK(inv(inv(a)) == a);
        CHECK(pow(a, f.order() - 1) == f.one());
      }
      for (const auto& b : el) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - b + b == a);
        for (const auto& c : el) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("irreducibility test agrees with root check on cubics") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t idx = 0; idx < p * p * p; ++idx) {
      PrimePoly f{idx % p, (idx / p) % p, idx / (p * p), 1};
      CHECK(is_irreducible(p, f) == !cubic_has_root(p, f));
    }
  }
}
