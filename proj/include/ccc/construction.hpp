#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ccc/composition.hpp"
#include "ccc/field.hpp"
#include "ccc/numeric.hpp"
#include "ccc/residue_ring.hpp"

namespace ccc {

/// mu_p(e): e when p divides e, e - 1 otherwise.
std::uint32_t mu(std::uint32_t p, std::uint32_t e);

/// Code length equals the field size r; words live in V_{r,comp}(q) and are
/// mapped into the quotient of units of F_r[x]/(x^d0) by scalars.
struct ConstructionParams {
  Field field;
  std::uint32_t q;
  std::uint32_t d0;
  Composition comp;

  /// Throws InvalidParams naming the violated constraint.
  void validate() const;
};

/// Product over coordinates i = 1..r-1 of (x - alpha_i)^{c_i}, reduced to its
/// coset. Coordinate r stands for alpha_0 = 0 and contributes nothing.
CosetRep pi_image(std::span<const Symbol> word, const ConstructionParams& params);

/// mu_p(d0) + 2 when p >= q. For p = 2, q = 3, d0 = 2 the even-length
/// refinement gives 3. Otherwise nothing is proved.
std::optional<std::uint32_t> guaranteed_distance(const ConstructionParams& params);
std::optional<std::uint32_t> guaranteed_distance(std::uint32_t p, std::uint32_t q, std::uint32_t d0);

/// ceil(multinomial(comp) / r^(d0-1)).
BigInt pigeonhole_size(const ConstructionParams& params);

/// Table-driven evaluation of pi over label arithmetic. Agrees with
/// pi_image(...).ordinal() on every word.
class PiMap {
 public:
  explicit PiMap(const ConstructionParams& params);

  std::uint64_t ordinal(std::span<const Symbol> word) const;
  std::uint64_t group_order() const { return group_order_; }

 private:
  std::uint32_t r_;
  std::uint32_t m_;
  std::uint64_t group_order_;
  std::vector<std::uint16_t> add_;   // r x r
  std::vector<std::uint16_t> mul_;   // r x r
  std::vector<std::uint16_t> inv_;   // r
  // powers_[(i * q + c) * m + j]: coefficient j of (x - alpha_{i+1})^c.
  std::vector<std::uint16_t> powers_;
  std::uint32_t q_;
};

/// Per-coset word counts over the whole space, indexed by CosetRep ordinal.
/// Workers split the rank range; merged counts do not depend on `threads`.
std::vector<std::uint64_t> coset_histogram(const ConstructionParams& params, unsigned threads = 1);

struct ConstructedCode {
  ConstructionParams params;
  std::vector<Word> words;  // lexicographic order
  CosetRep coset;
  std::optional<std::uint32_t> guaranteed_d;
  std::optional<std::uint32_t> verified_d;
  std::vector<std::uint64_t> coset_counts;
};

/// Pass one counts every fiber; the largest wins, ties going to the smallest
/// coset representative. Pass two collects that fiber.
ConstructedCode build_code(const ConstructionParams& params, unsigned threads = 1);

}  // namespace ccc
