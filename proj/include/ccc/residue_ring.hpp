#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ccc/field.hpp"

namespace ccc {

/// An element of F_r[x]/(x^m): coefficient of x^j at position j, m >= 1.
class ResiduePoly {
 public:
  /// All coefficients must share one field; throws MixedFields otherwise.
  explicit ResiduePoly(std::vector<FieldElement> coeffs);

  static ResiduePoly zero(const Field& field, std::size_t m);
  static ResiduePoly one(const Field& field, std::size_t m);
  static ResiduePoly constant(const FieldElement& c, std::size_t m);
  /// x - alpha, truncated to m terms.
  static ResiduePoly x_minus(const FieldElement& alpha, std::size_t m);
  static ResiduePoly from_indices(const Field& field, std::span<const std::uint32_t> indices);

  const Field& field() const { return coeffs_.front().field(); }
  std::size_t truncation() const { return coeffs_.size(); }
  std::span<const FieldElement> coeffs() const { return coeffs_; }
  const FieldElement& operator[](std::size_t j) const { return coeffs_[j]; }
  std::vector<std::uint32_t> indices() const;

  bool is_unit() const { return !coeffs_.front().is_zero(); }

  friend bool operator==(const ResiduePoly&, const ResiduePoly&) = default;

 private:
  std::vector<FieldElement> coeffs_;
};

ResiduePoly ring_add(const ResiduePoly& a, const ResiduePoly& b);
ResiduePoly ring_mul(const ResiduePoly& a, const ResiduePoly& b);
ResiduePoly ring_pow(const ResiduePoly& a, std::uint64_t e);
ResiduePoly ring_inv(const ResiduePoly& a);
ResiduePoly ring_scale(const FieldElement& lambda, const ResiduePoly& a);

/// The member of a unit's class under F_r^* scaling whose constant term is one.
class CosetRep {
 public:
  const ResiduePoly& poly() const { return poly_; }
  std::size_t truncation() const { return poly_.truncation(); }

  /// Dense label in [0, r^(m-1)) that sorts exactly like operator<=>.
  std::uint64_t ordinal() const;

  friend bool operator==(const CosetRep& a, const CosetRep& b) { return a.poly_ == b.poly_; }
  /// Lexicographic on coefficient labels, low degree first.
  friend std::strong_ordering operator<=>(const CosetRep& a, const CosetRep& b);

 private:
  friend CosetRep canonical_rep(const ResiduePoly& a);
  friend CosetRep coset_from_ordinal(const Field& field, std::size_t m, std::uint64_t ordinal);
  explicit CosetRep(ResiduePoly poly) : poly_(std::move(poly)) {}

  ResiduePoly poly_;
};

CosetRep canonical_rep(const ResiduePoly& a);
CosetRep coset_from_ordinal(const Field& field, std::size_t m, std::uint64_t ordinal);

/// |(F_r[x]/(x^m))^* / F_r^*| = r^(m-1).
std::uint64_t quotient_order(const Field& field, std::size_t m);

/// Comma-separated coefficient labels, low degree first: "1,0,2".
std::string to_string(const ResiduePoly& a);
inline std::string to_string(const CosetRep& c) { return to_string(c.poly()); }

}  // namespace ccc
