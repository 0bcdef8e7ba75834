#include "ccc/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "ccc/construction.hpp"
#include "ccc/error.hpp"
#include "ccc/field.hpp"

namespace ccc {
namespace {

void require_q3_or_more(std::uint32_t q) {
  if (q < 3) throw Error(ErrorCode::kQTooSmall, "Q is defined for q >= 3 (got q=" + std::to_string(q) + ")");
}

BigInt gcd(BigInt a, BigInt b) {
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

}  // namespace

BigInt primorial_Q(std::uint32_t q) {
  require_q3_or_more(q);
  BigInt out = 1;
  for (std::uint32_t v = 2; v + 1 <= q; ++v) {
    if (is_prime(v)) out *= v;
  }
  return out;
}

BigInt least_coprime(const BigInt& s, std::uint32_t q) {
  const BigInt big_q = primorial_Q(q);
  if (s < 0 || s >= big_q) {
    throw Error(ErrorCode::kSOutOfRange, "s must satisfy 0 <= s <= Q-1 (Q=" + big_q.str() + ")");
  }
  BigInt l = s;
  while (gcd(l, big_q) != 1) ++l;
  return l;
}

BigInt coprime_gap(std::uint32_t n, std::uint32_t q) {
  const BigInt t = BigInt(n) % primorial_Q(q);
  return least_coprime(t, q) - t;
}

Rational gap_lower_bound_exact(const Composition& comp) {
  return ratio(multinomial(comp), comp.n() + coprime_gap(comp.n(), comp.q()));
}

BigInt gap_lower_bound(const Composition& comp) {
  return floor_div(multinomial(comp), comp.n() + coprime_gap(comp.n(), comp.q()));
}

std::optional<BigInt> coprime_length_lower_bound(const Composition& comp) {
  if (gcd(BigInt(comp.n()), primorial_Q(comp.q())) != 1) return std::nullopt;
  return floor_div(multinomial(comp), comp.n());
}

BigInt ternary_parity_lower_bound(const Composition& comp) {
  if (comp.q() != 3) {
    throw Error(ErrorCode::kWrongQ, "the parity bound is ternary only (got q=" + std::to_string(comp.q()) + ")");
  }
  const std::uint32_t n = comp.n();
  return floor_div(multinomial(comp), n % 2 == 1 ? n : n + 1);
}

PackingBound packing_upper_bound(const Composition& comp, std::uint32_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidParams, "distance d must be >= 1");
  const std::uint32_t delta = (d - 1) / 2;
  const std::uint32_t q = comp.q();
  const BigInt total = multinomial(comp);

  std::optional<PackingBound> best;
  std::vector<std::uint32_t> split(q, 0);
  for (std::uint32_t row = 0; row < q; ++row) {
    // Enumerate delta splits over the other symbols, lexicographically.
    auto rec = [&](auto&& self, std::uint32_t l, std::uint32_t left) -> void {
      if (l == q) {
        if (left != 0) return;
        std::vector<std::uint32_t> parts{comp.weight(row)};
        parts.insert(parts.end(), split.begin(), split.end());
        BigInt den = multinomial(parts);
        if (!best || den > best->denominator) {
          best = PackingBound{floor_div(total, den), ratio(total, den), row, split, den};
        }
        return;
      }
      const std::uint32_t cap = (l == row) ? 0 : std::min(comp.weight(l), left);
      for (std::uint32_t v = 0; v <= cap; ++v) {
        split[l] = v;
        self(self, l + 1, left - v);
      }
      split[l] = 0;
    };
    rec(rec, 0, delta);
  }
  if (!best) {
    throw Error(ErrorCode::kNoAdmissibleDelta,
                "no delta split of " + std::to_string(delta) + " fits composition " + comp.to_string());
  }
  return *best;
}

ResidueConstructionBound residue_construction_bound(std::uint32_t r, std::uint32_t p,
                                                    const Composition& comp, std::uint32_t d0) {
  const auto pk = prime_power(r);
  if (!pk || pk->first != p) {
    throw Error(ErrorCode::kInvalidParams, std::to_string(r) + " is not a power of " + std::to_string(p));
  }
  if (comp.n() != r) {
    throw Error(ErrorCode::kInvalidParams, "composition length n=" + std::to_string(comp.n()) +
                                               " must equal r=" + std::to_string(r));
  }
  if (d0 < 1 || d0 + 2 > r) {
    throw Error(ErrorCode::kInvalidParams, "d0 must satisfy 1 <= d0 <= r-2 (got d0=" +
                                               std::to_string(d0) + ", r=" + std::to_string(r) + ")");
  }
  BigInt group = 1;
  for (std::uint32_t j = 1; j < d0; ++j) group *= r;
  const BigInt total = multinomial(comp);
  return {guaranteed_distance(p, comp.q(), d0), ceil_div(total, group), ratio(total, group)};
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t n) {
  if (n < 2) return std::nullopt;
  std::uint32_t p = 2;
  while (n % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint32_t m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, k);
}

namespace {

BoundEntry not_applicable(std::string name, BoundKind kind, std::string note) {
  return BoundEntry{std::move(name), kind, false, std::move(note), std::nullopt, std::nullopt};
}

BoundEntry residue_entry(const BoundQuery& query) {
  const std::string name = "residue_construction";
  const Composition& comp = query.comp;
  const std::uint32_t n = comp.n();

  std::uint32_t p = 0;
  if (query.field) {
    std::uint64_t r = 1;
    for (std::uint32_t j = 0; j < query.field->second; ++j) r *= query.field->first;
    if (!is_prime(query.field->first) || r != n) {
      throw Error(ErrorCode::kInvalidParams, "field " + std::to_string(query.field->first) + "^" +
                                                 std::to_string(query.field->second) +
                                                 " must be a prime power equal to n=" + std::to_string(n));
    }
    p = query.field->first;
  } else {
    if (query.d0) throw Error(ErrorCode::kInvalidParams, "d0 requires a field p^k");
    const auto pk = prime_power(n);
    if (!pk) return not_applicable(name, BoundKind::kLower, "n is not a prime power");
    p = pk->first;
  }

  std::vector<std::uint32_t> candidates;
  if (query.d0) {
    candidates.push_back(*query.d0);
  } else {
    for (std::uint32_t d0 = 1; d0 + 2 <= n; ++d0) candidates.push_back(d0);
  }
  if (candidates.empty()) return not_applicable(name, BoundKind::kLower, "no d0 with 1 <= d0 <= n-2");

  std::optional<std::pair<std::uint32_t, ResidueConstructionBound>> best;
  std::optional<std::uint32_t> strongest_guarantee;
  for (auto d0 : candidates) {
    auto b = residue_construction_bound(n, p, comp, d0);
    if (b.distance && (!strongest_guarantee || *b.distance > *strongest_guarantee)) {
      strongest_guarantee = b.distance;
    }
    if (!b.distance || *b.distance < query.d) continue;
    if (!best || b.size > best->second.size) best.emplace(d0, std::move(b));
  }
  if (!best) {
    std::string note = "no proved distance";
    if (strongest_guarantee) {
      note = "guaranteed distance " + std::to_string(*strongest_guarantee) + " < d=" + std::to_string(query.d);
    }
    if (query.d0) note += " at d0=" + std::to_string(*query.d0);
    return not_applicable(name, BoundKind::kLower, note);
  }
  std::string note = "p=" + std::to_string(p) + " d0=" + std::to_string(best->first) +
                     " guaranteed_d=" + std::to_string(*best->second.distance);
  return BoundEntry{name, BoundKind::kLower, true, note, best->second.exact, best->second.size};
}

}  // namespace

BoundReport bound_report(const BoundQuery& query) {
  const Composition& comp = query.comp;
  const std::uint32_t q = comp.q();
  const std::uint32_t n = comp.n();
  BoundReport report{q, n, query.d, comp, {}, {}, std::nullopt, std::nullopt};

  const bool d3 = query.d == 3;
  if (q < 3) {
    report.lower_bounds.push_back(not_applicable("gap", BoundKind::kLower, "requires q>=3"));
    report.lower_bounds.push_back(not_applicable("coprime_length", BoundKind::kLower, "requires q>=3"));
  } else if (!d3) {
    report.lower_bounds.push_back(not_applicable("gap", BoundKind::kLower, "requires d=3"));
    report.lower_bounds.push_back(not_applicable("coprime_length", BoundKind::kLower, "requires d=3"));
  } else {
    report.lower_bounds.push_back(BoundEntry{"gap", BoundKind::kLower, true,
                                             "gap=" + coprime_gap(n, q).str(),
                                             gap_lower_bound_exact(comp), gap_lower_bound(comp)});
    if (auto v = coprime_length_lower_bound(comp)) {
      report.lower_bounds.push_back(BoundEntry{"coprime_length", BoundKind::kLower, true,
                                               "gcd(n,Q)=1", ratio(multinomial(comp), n), *v});
    } else {
      report.lower_bounds.push_back(
          not_applicable("coprime_length", BoundKind::kLower, "gcd(n,Q)=" + gcd(BigInt(n), primorial_Q(q)).str()));
    }
  }
  if (q != 3) {
    report.lower_bounds.push_back(not_applicable("ternary_parity", BoundKind::kLower, "requires q=3"));
  } else if (!d3) {
    report.lower_bounds.push_back(not_applicable("ternary_parity", BoundKind::kLower, "requires d=3"));
  } else {
    const std::uint32_t den = n % 2 == 1 ? n : n + 1;
    report.lower_bounds.push_back(BoundEntry{"ternary_parity", BoundKind::kLower, true,
                                             n % 2 == 1 ? "odd n" : "even n",
                                             ratio(multinomial(comp), den), ternary_parity_lower_bound(comp)});
  }
  report.lower_bounds.push_back(residue_entry(query));

  try {
    const PackingBound pb = packing_upper_bound(comp, query.d);
    std::string note = "row=" + std::to_string(pb.row) + " deltas=";
    for (std::size_t l = 0; l < pb.deltas.size(); ++l) {
      if (l) note += ',';
      note += std::to_string(pb.deltas[l]);
    }
    note += " denominator=" + pb.denominator.str();
    report.upper_bounds.push_back(BoundEntry{"packing", BoundKind::kUpper, true, note, pb.exact, pb.value});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoAdmissibleDelta) throw;
    report.upper_bounds.push_back(not_applicable("packing", BoundKind::kUpper, "no admissible delta split"));
  }

  for (const auto& e : report.lower_bounds) {
    if (e.applicable && (!report.best_lower || *e.value > *report.best_lower)) report.best_lower = e.value;
  }
  for (const auto& e : report.upper_bounds) {
    if (e.applicable && (!report.best_upper || *e.value < *report.best_upper)) report.best_upper = e.value;
  }
  return report;
}

std::string to_text(const BoundReport& report) {
  std::ostringstream os;
  os << "q=" << report.q << "\n"
     << "n=" << report.n << "\n"
     << "d=" << report.d << "\n"
     << "composition=" << report.comp.to_string() << "\n";
  auto emit = [&](const BoundEntry& e) {
    os << (e.kind == BoundKind::kLower ? "lower" : "upper") << " name=" << e.name
       << " status=" << (e.applicable ? "applicable" : "not-applicable")
       << " exact=" << (e.exact ? to_string(*e.exact) : "-")
       << " value=" << (e.value ? e.value->str() : "-") << " note=\"" << e.note << "\"\n";
  };
  for (const auto& e : report.lower_bounds) emit(e);
  for (const auto& e : report.upper_bounds) emit(e);
  os << "best_lower=" << (report.best_lower ? report.best_lower->str() : "none") << "\n"
     << "best_upper=" << (report.best_upper ? report.best_upper->str() : "none") << "\n";
  return os.str();
}

}  // namespace ccc
