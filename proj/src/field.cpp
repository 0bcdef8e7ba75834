#include "ccc/field.hpp"

#include <cassert>
#include <limits>
#include <sstream>

#include "ccc/error.hpp"

namespace ccc {
namespace {

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is small.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b must be nonzero.
PrimePoly poly_mod(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  assert(!b.empty());
  const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::uint64_t sub = factor * b[j] % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::uint64_t checked_power(std::uint32_t p, std::uint32_t k) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    r *= p;
    if (r > (1u << 16)) {
      throw Error(ErrorCode::kInvalidParams, "field order p^k exceeds 2^16");
    }
  }
  return r;
}

PrimePoly digits(std::uint64_t value, std::uint32_t p, std::uint32_t width) {
  PrimePoly out(width, 0);
  for (std::uint32_t j = 0; j < width; ++j) {
    out[j] = static_cast<std::uint32_t>(value % p);
    value /= p;
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const PrimePoly& poly) {
  PrimePoly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < d; ++j) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PrimePoly g = digits(idx, p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field Field::create(std::uint32_t p, std::uint32_t k, std::optional<PrimePoly> modulus) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, "characteristic " + std::to_string(p) + " is not prime");
  }
  if (k == 0) throw Error(ErrorCode::kInvalidParams, "extension degree k must be >= 1");

  auto params = std::make_shared<FieldParams>();
  params->p = p;
  params->k = k;
  params->r = static_cast<std::uint32_t>(checked_power(p, k));

  if (modulus) {
    PrimePoly m = *modulus;
    if (m.size() != k + 1 || m.back() != 1) {
      throw Error(ErrorCode::kInvalidModulus,
                  "modulus must be monic of degree " + std::to_string(k));
    }
    for (auto c : m) {
      if (c >= p) throw Error(ErrorCode::kInvalidModulus, "modulus coefficient out of range");
    }
    if (!is_irreducible(p, m)) {
      throw Error(ErrorCode::kReducibleModulus, "supplied modulus factors over GF(p)");
    }
    params->modulus = std::move(m);
  } else if (k == 1) {
    params->modulus = {0, 1};
  } else {
    const std::uint64_t count = params->r;  // p^k candidates for the low coefficients
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PrimePoly candidate = digits(idx, p, k);
      candidate.push_back(1);
      if (is_irreducible(p, candidate)) {
        params->modulus = std::move(candidate);
        break;
      }
    }
    assert(!params->modulus.empty());
  }
  return Field(std::move(params));
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }
FieldElement Field::element(std::uint32_t index) const { return FieldElement(*this, index); }

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > params_->k) {
    throw Error(ErrorCode::kInvalidParams, "too many coefficients for field element");
  }
  std::uint32_t index = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    if (coeffs[j] >= params_->p) {
      throw Error(ErrorCode::kInvalidParams, "coefficient out of range");
    }
    index = index * params_->p + coeffs[j];
  }
  return FieldElement(*this, index);
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(params_->r);
  for (std::uint32_t i = 0; i < params_->r; ++i) out.emplace_back(*this, i);
  return out;
}

std::uint32_t Field::add_index(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = params_->p;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t j = 0; j < params_->k; ++j) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t Field::neg_index(std::uint32_t a) const {
  const std::uint32_t p = params_->p;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t j = 0; j < params_->k; ++j) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t Field::mul_index(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = params_->p;
  const std::uint32_t k = params_->k;
  const PrimePoly x = digits(a, p, k);
  const PrimePoly y = digits(b, p, k);
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  // The modulus is monic, so x^k = -(m_0 + ... + m_{k-1} x^{k-1}).
  const PrimePoly& m = params_->modulus;
  for (std::size_t deg = prod.size(); deg-- > k;) {
    const std::uint64_t c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (std::uint32_t j = 0; j < k; ++j) {
      prod[deg - k + j] = (prod[deg - k + j] + (p - c) * m[j]) % p;
    }
  }
  std::uint32_t out = 0;
  for (std::uint32_t j = k; j-- > 0;) out = out * p + static_cast<std::uint32_t>(prod[j]);
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << params_->p << "^" << params_->k << ")";
  if (params_->k > 1) {
    os << " mod ";
    for (std::size_t j = 0; j < params_->modulus.size(); ++j) {
      if (j) os << ",";
      os << params_->modulus[j];
    }
  }
  return os.str();
}

FieldElement::FieldElement(Field field, std::uint32_t index) : field_(std::move(field)), index_(index) {
  if (index_ >= field_.order()) {
    throw Error(ErrorCode::kInvalidParams, "element index out of range");
  }
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
  return digits(index_, field_.characteristic(), field_.degree());
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::kMixedFields, "operands belong to different fields");
  }
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field(), a.field().add_index(a.index(), b.index()));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  return FieldElement(f, f.add_index(a.index(), f.neg_index(b.index())));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field(), a.field().mul_index(a.index(), b.index()));
}

FieldElement neg(const FieldElement& a) {
  return FieldElement(a.field(), a.field().neg_index(a.index()));
}

FieldElement pow(const FieldElement& a, std::uint64_t e) {
  const Field& f = a.field();
  std::uint32_t result = 1, base = a.index();
  for (; e > 0; e >>= 1) {
    if (e & 1u) result = f.mul_index(result, base);
    base = f.mul_index(base, base);
  }
  return FieldElement(f, result);
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return pow(a, a.field().order() - 2);
}

std::string to_string(const FieldElement& a) {
  const auto c = a.coeffs();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (j == 0) {
      os << c[j];
    } else {
      if (c[j] != 1) os << c[j];
      os << "x";
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ccc
