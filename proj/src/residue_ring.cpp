#include "ccc/residue_ring.hpp"

#include <algorithm>

#include "ccc/error.hpp"

namespace ccc {
namespace {

void require_same_ring(const ResiduePoly& a, const ResiduePoly& b) {
  if (a.truncation() != b.truncation() || !(a.field() == b.field())) {
    throw Error(ErrorCode::kMixedRings, "operands belong to different residue rings");
  }
}

}  // namespace

ResiduePoly::ResiduePoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::kInvalidParams, "truncation order m must be >= 1");
  for (const auto& c : coeffs_) {
    if (!(c.field() == coeffs_.front().field())) {
      throw Error(ErrorCode::kMixedFields, "coefficients from different fields");
    }
  }
}

ResiduePoly ResiduePoly::zero(const Field& field, std::size_t m) {
  return ResiduePoly(std::vector<FieldElement>(m, field.zero()));
}

ResiduePoly ResiduePoly::one(const Field& field, std::size_t m) {
  return constant(field.one(), m);
}

ResiduePoly ResiduePoly::constant(const FieldElement& c, std::size_t m) {
  std::vector<FieldElement> coeffs(m, c.field().zero());
  if (m > 0) coeffs[0] = c;
  return ResiduePoly(std::move(coeffs));
}

ResiduePoly ResiduePoly::x_minus(const FieldElement& alpha, std::size_t m) {
  std::vector<FieldElement> coeffs(m, alpha.field().zero());
  if (m > 0) coeffs[0] = neg(alpha);
  if (m > 1) coeffs[1] = alpha.field().one();
  return ResiduePoly(std::move(coeffs));
}

ResiduePoly ResiduePoly::from_indices(const Field& field, std::span<const std::uint32_t> indices) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(indices.size());
  for (auto i : indices) coeffs.push_back(field.element(i));
  return ResiduePoly(std::move(coeffs));
}

std::vector<std::uint32_t> ResiduePoly::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.index());
  return out;
}

ResiduePoly ring_add(const ResiduePoly& a, const ResiduePoly& b) {
  require_same_ring(a, b);
  std::vector<FieldElement> out;
  out.reserve(a.truncation());
  for (std::size_t j = 0; j < a.truncation(); ++j) out.push_back(a[j] + b[j]);
  return ResiduePoly(std::move(out));
}

ResiduePoly ring_mul(const ResiduePoly& a, const ResiduePoly& b) {
  require_same_ring(a, b);
  const Field& f = a.field();
  const std::size_t m = a.truncation();
  std::vector<std::uint32_t> acc(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < m; ++j) {
      acc[i + j] = f.add_index(acc[i + j], f.mul_index(a[i].index(), b[j].index()));
    }
  }
  return ResiduePoly::from_indices(f, acc);
}

ResiduePoly ring_pow(const ResiduePoly& a, std::uint64_t e) {
  ResiduePoly result = ResiduePoly::one(a.field(), a.truncation());
  ResiduePoly base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1u) result = ring_mul(result, base);
    if (e > 1) base = ring_mul(base, base);
  }
  return result;
}

ResiduePoly ring_inv(const ResiduePoly& a) {
  if (!a.is_unit()) throw Error(ErrorCode::kNotAUnit, "constant coefficient is zero");
  const Field& f = a.field();
  const std::size_t m = a.truncation();
  // Solve a * b = 1 degree by degree: b_j = -a_0^{-1} * sum_{i=1..j} a_i b_{j-i}.
  const std::uint32_t a0_inv = inv(a[0]).index();
  std::vector<std::uint32_t> b(m, 0);
  b[0] = a0_inv;
  for (std::size_t j = 1; j < m; ++j) {
    std::uint32_t s = 0;
    for (std::size_t i = 1; i <= j; ++i) s = f.add_index(s, f.mul_index(a[i].index(), b[j - i]));
    b[j] = f.mul_index(f.neg_index(s), a0_inv);
  }
  return ResiduePoly::from_indices(f, b);
}

ResiduePoly ring_scale(const FieldElement& lambda, const ResiduePoly& a) {
  return ring_mul(ResiduePoly::constant(lambda, a.truncation()), a);
}

CosetRep canonical_rep(const ResiduePoly& a) {
  if (!a.is_unit()) throw Error(ErrorCode::kNotAUnit, "only units have a coset in the quotient");
  return CosetRep(ring_scale(inv(a[0]), a));
}

CosetRep coset_from_ordinal(const Field& field, std::size_t m, std::uint64_t ordinal) {
  if (ordinal >= quotient_order(field, m)) {
    throw Error(ErrorCode::kInvalidParams, "coset ordinal out of range");
  }
  std::vector<std::uint32_t> idx(m, 0);
  idx[0] = 1;
  for (std::size_t j = m; j-- > 1;) {
    idx[j] = static_cast<std::uint32_t>(ordinal % field.order());
    ordinal /= field.order();
  }
  return CosetRep(ResiduePoly::from_indices(field, idx));
}

std::uint64_t CosetRep::ordinal() const {
  const std::uint64_t r = poly_.field().order();
  std::uint64_t out = 0;
  for (std::size_t j = 1; j < poly_.truncation(); ++j) out = out * r + poly_[j].index();
  return out;
}

std::strong_ordering operator<=>(const CosetRep& a, const CosetRep& b) {
  const auto x = a.poly_.indices();
  const auto y = b.poly_.indices();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

std::uint64_t quotient_order(const Field& field, std::size_t m) {
  std::uint64_t out = 1;
  for (std::size_t j = 1; j < m; ++j) out *= field.order();
  return out;
}

std::string to_string(const ResiduePoly& a) {
  std::string out;
  for (std::size_t j = 0; j < a.truncation(); ++j) {
    if (j) out += ',';
    out += std::to_string(a[j].index());
  }
  return out;
}

}  // namespace ccc
