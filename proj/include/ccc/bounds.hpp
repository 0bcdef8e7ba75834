#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccc/composition.hpp"
#include "ccc/numeric.hpp"

namespace ccc {

/// Product of the primes <= q - 1, for q >= 3.
BigInt primorial_Q(std::uint32_t q);

/// Smallest l >= s with gcd(l, Q) = 1, for 0 <= s <= Q - 1.
BigInt least_coprime(const BigInt& s, std::uint32_t q);

/// L(t_n, q) - t_n where t_n = n mod Q.
BigInt coprime_gap(std::uint32_t n, std::uint32_t q);

// Distance-3 lower bounds on the maximum code size. All return the floor of
// the exact quotient; `exact` overloads return the quotient itself.

/// multinomial / (n + gap). Valid for every q >= 3.
BigInt gap_lower_bound(const Composition& comp);
Rational gap_lower_bound_exact(const Composition& comp);

/// multinomial / n when gcd(n, Q) = 1, nothing otherwise.
std::optional<BigInt> coprime_length_lower_bound(const Composition& comp);

/// Ternary only: multinomial / n for odd n, multinomial / (n + 1) for even n.
/// Throws WrongQ for q != 3.
BigInt ternary_parity_lower_bound(const Composition& comp);

/// Packing upper bound for distance d with delta = floor((d - 1) / 2):
/// multinomial(comp) / multinomial(w_i + delta; w_i, delta_0, ..., delta_{q-1})
/// minimized over every row i and every delta split with delta_i = 0 and
/// delta_l <= w_l. Throws NoAdmissibleDelta when no split exists.
struct PackingBound {
  BigInt value;         // floor of `exact`
  Rational exact;
  std::uint32_t row = 0;
  std::vector<std::uint32_t> deltas;
  BigInt denominator;
};
PackingBound packing_upper_bound(const Composition& comp, std::uint32_t d);

/// Residue-polynomial construction over GF(p^k), r = p^k = n.
struct ResidueConstructionBound {
  std::optional<std::uint32_t> distance;
  BigInt size;  // ceil(multinomial / r^(d0-1))
  Rational exact;
};
ResidueConstructionBound residue_construction_bound(std::uint32_t r, std::uint32_t p,
                                                    const Composition& comp, std::uint32_t d0);

enum class BoundKind { kLower, kUpper };

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::kLower;
  bool applicable = false;
  std::string note;
  std::optional<Rational> exact;
  std::optional<BigInt> value;
};

struct BoundQuery {
  Composition comp;
  std::uint32_t d = 3;
  /// Field for the residue construction; when absent and n is a prime power,
  /// every admissible d0 is tried and the best one reported.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> field;  // (p, k)
  std::optional<std::uint32_t> d0;
};

struct BoundReport {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  Composition comp;
  std::vector<BoundEntry> lower_bounds;
  std::vector<BoundEntry> upper_bounds;
  std::optional<BigInt> best_lower;
  std::optional<BigInt> best_upper;
};

BoundReport bound_report(const BoundQuery& query);

/// One line per bound: `lower name=... status=... exact=... value=... note="..."`.
std::string to_text(const BoundReport& report);

/// (p, k) with p^k = n, if n is a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t n);

}  // namespace ccc
