#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ccc {

/// Coefficients of a polynomial over GF(p), constant term first.
using PrimePoly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(std::uint32_t p, const PrimePoly& poly);

struct FieldParams {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t r = 0;
  /// Monic, degree k, k+1 coefficients. For k == 1 this is the placeholder x.
  PrimePoly modulus;

  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

class FieldElement;

/// Shared immutable handle onto GF(p^k). Elements are labeled by the base-p
/// encoding of their coefficient vector, so index 0 is zero and index 1 is one.
class Field {
 public:
  /// Without a modulus the smallest monic irreducible of degree k is chosen,
  /// ordering candidates by sum(c_j * p^j) over the non-leading coefficients.
  static Field create(std::uint32_t p, std::uint32_t k,
                      std::optional<PrimePoly> modulus = std::nullopt);

  const FieldParams& params() const { return *params_; }
  std::uint32_t characteristic() const { return params_->p; }
  std::uint32_t degree() const { return params_->k; }
  std::uint32_t order() const { return params_->r; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::uint32_t index) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;

  /// All r elements in label order; element 0 first.
  std::vector<FieldElement> elements() const;

  // Raw label arithmetic, no validation beyond debug asserts.
  std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_index(std::uint32_t a) const;
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.params_ == b.params_ || *a.params_ == *b.params_;
  }

 private:
  explicit Field(std::shared_ptr<const FieldParams> params) : params_(std::move(params)) {}

  std::shared_ptr<const FieldParams> params_;
};

inline Field field_new(std::uint32_t p, std::uint32_t k,
                       std::optional<PrimePoly> modulus = std::nullopt) {
  return Field::create(p, k, std::move(modulus));
}

class FieldElement {
 public:
  FieldElement(Field field, std::uint32_t index);

  const Field& field() const { return field_; }
  std::uint32_t index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  std::vector<std::uint32_t> coeffs() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.index_ == b.index_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  std::uint32_t index_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t e);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }

inline std::vector<FieldElement> enumerate(const Field& field) { return field.elements(); }

/// Renders an element as a polynomial in x, e.g. "x^2+2x+1"; "0" for zero.
std::string to_string(const FieldElement& a);

}  // namespace ccc
