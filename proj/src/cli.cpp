#include "ccc/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccc/bounds.hpp"
#include "ccc/code_file.hpp"
#include "ccc/construction.hpp"
#include "ccc/error.hpp"
#include "ccc/verify.hpp"

namespace ccc::cli {
namespace {

struct ConstructOptions {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint32_t q = 0;
  std::uint32_t d0 = 0;
  std::string composition;
  std::string out;
  std::string modulus;
  unsigned threads = 1;
  bool skip_verify = false;
};

struct BoundsOptions {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::string composition;
  std::string field;
  std::uint32_t d0 = 0;
  std::string format = "text";
};

struct VerifyOptions {
  std::string code;
  std::uint32_t expect_d = 0;
  unsigned threads = 1;
};

struct OracleOptionsCli {
  std::uint32_t q = 0;
  std::uint32_t d = 0;
  std::string composition;
  std::uint64_t cap = 5000;
  std::string out;
};

Composition composition_for(std::uint32_t q, const std::string& text) {
  Composition comp = Composition::parse(text);
  if (comp.q() != q) {
    throw Error(ErrorCode::kInvalidParams, "--composition has " + std::to_string(comp.q()) +
                                               " entries but --q is " + std::to_string(q));
  }
  return comp;
}

PrimePoly parse_modulus(const std::string& text) {
  PrimePoly out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidModulus, "cannot parse --modulus entry '" + part + "'");
    }
  }
  return out;
}

std::pair<std::uint32_t, std::uint32_t> parse_field(const std::string& text) {
  const auto caret = text.find('^');
  try {
    if (caret == std::string::npos) throw std::invalid_argument(text);
    std::size_t a = 0, b = 0;
    const unsigned long p = std::stoul(text.substr(0, caret), &a);
    const unsigned long k = std::stoul(text.substr(caret + 1), &b);
    if (a != caret || b != text.size() - caret - 1) throw std::invalid_argument(text);
    return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k)};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidParams, "--field must look like p^k, got '" + text + "'");
  }
}

std::string optional_text(const std::optional<std::uint32_t>& v) {
  return v ? std::to_string(*v) : "none";
}

int cmd_construct(const ConstructOptions& o, std::ostream& out, std::ostream& err) {
  std::optional<PrimePoly> modulus;
  if (!o.modulus.empty()) modulus = parse_modulus(o.modulus);
  const Field field = Field::create(o.p, o.k, modulus);
  ConstructionParams params{field, o.q, o.d0, composition_for(o.q, o.composition)};
  params.validate();

  ConstructedCode code = build_code(params, o.threads);
  if (!o.skip_verify && code.words.size() >= 2) {
    code.verified_d = static_cast<std::uint32_t>(exact_min_distance(code.words, o.threads));
  }

  CodeFile file{params.comp,
                std::to_string(o.p) + "^" + std::to_string(o.k),
                params.d0,
                true,
                code.guaranteed_d,
                code.words};
  {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::kInvalidParams, "cannot open --out file '" + o.out + "'");
    write_code_file(f, file);
    if (!f) throw Error(ErrorCode::kInvalidParams, "failed writing '" + o.out + "'");
  }

  out << "field=" << field.describe() << "\n"
      << "r=" << field.order() << "\n"
      << "q=" << params.q << "\n"
      << "d0=" << params.d0 << "\n"
      << "composition=" << params.comp.to_string() << "\n"
      << "space=" << multinomial(params.comp) << "\n"
      << "quotient_order=" << quotient_order(field, params.d0) << "\n"
      << "pigeonhole_bound=" << pigeonhole_size(params) << "\n"
      << "M=" << code.words.size() << "\n"
      << "coset=" << to_string(code.coset) << "\n"
      << "guaranteed_d=" << optional_text(code.guaranteed_d) << "\n"
      << "verified_d=" << optional_text(code.verified_d) << "\n"
      << "out=" << o.out << "\n";
  if (code.verified_d && code.guaranteed_d && *code.verified_d < *code.guaranteed_d) {
    err << "warning: verified distance " << *code.verified_d << " is below the guaranteed "
        << *code.guaranteed_d << "\n";
  }
  return kOk;
}

nlohmann::json to_json(const BoundReport& report) {
  auto entries = [](const std::vector<BoundEntry>& list) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : list) {
      arr.push_back({{"name", e.name},
                     {"applicable", e.applicable},
                     {"exact", e.exact ? nlohmann::json(to_string(*e.exact)) : nlohmann::json(nullptr)},
                     {"value", e.value ? nlohmann::json(e.value->str()) : nlohmann::json(nullptr)},
                     {"note", e.note}});
    }
    return arr;
  };
  std::vector<std::uint32_t> weights(report.comp.weights().begin(), report.comp.weights().end());
  return {{"q", report.q},
          {"n", report.n},
          {"d", report.d},
          {"composition", weights},
          {"lower_bounds", entries(report.lower_bounds)},
          {"upper_bounds", entries(report.upper_bounds)},
          {"best_lower", report.best_lower ? nlohmann::json(report.best_lower->str()) : nlohmann::json(nullptr)},
          {"best_upper", report.best_upper ? nlohmann::json(report.best_upper->str()) : nlohmann::json(nullptr)}};
}

int cmd_bounds(const BoundsOptions& o, std::ostream& out) {
  const Composition comp = composition_for(o.q, o.composition);
  if (comp.n() != o.n) {
    throw Error(ErrorCode::kInvalidParams, "--composition sums to " + std::to_string(comp.n()) +
                                               " but --n is " + std::to_string(o.n));
  }
  BoundQuery query{comp, o.d, std::nullopt, std::nullopt};
  if (!o.field.empty()) query.field = parse_field(o.field);
  if (o.d0 != 0) query.d0 = o.d0;
  const BoundReport report = bound_report(query);
  if (o.format == "structured") {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_text(report);
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  std::ifstream f(o.code, std::ios::binary);
  if (!f) throw Error(ErrorCode::kMalformedCodeFile, "cannot open '" + o.code + "'");
  const CodeFile file = read_code_file(f);
  std::optional<std::size_t> d;
  if (file.words.size() >= 2) d = exact_min_distance(file.words, o.threads);

  out << "q=" << file.q() << "\n"
      << "n=" << file.n() << "\n"
      << "composition=" << file.comp.to_string() << "\n"
      << "size=" << file.words.size() << "\n"
      << "min_distance=" << (d ? std::to_string(*d) : "none") << "\n";
  if (file.has_guaranteed_d) out << "guaranteed_d=" << optional_text(file.guaranteed_d) << "\n";
  if (o.expect_d != 0) {
    const bool ok = !d || *d >= o.expect_d;
    out << "expect_d=" << o.expect_d << " " << (ok ? "pass" : "fail") << "\n";
    if (!ok) {
      err << "minimum distance " << *d << " is below expected " << o.expect_d << "\n";
      return kExpectationFailed;
    }
  }
  return kOk;
}

int cmd_oracle(const OracleOptionsCli& o, std::ostream& out) {
  const Composition comp = composition_for(o.q, o.composition);
  const MaxCode best = exact_max_code(comp, o.d, OracleOptions{o.cap});
  out << "q=" << comp.q() << "\n"
      << "n=" << comp.n() << "\n"
      << "d=" << o.d << "\n"
      << "composition=" << comp.to_string() << "\n"
      << "space=" << multinomial(comp) << "\n"
      << "max_size=" << best.size << "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::kInvalidParams, "cannot open --out file '" + o.out + "'");
    write_code_file(f, CodeFile{comp, std::nullopt, std::nullopt, false, std::nullopt, best.witness});
    out << "witness=" << o.out << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant-composition codes from residue polynomials: construction, bounds, verification"};
  app.name("ccc");
  app.require_subcommand(1);

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "Build a code as the largest fiber of the residue map");
  construct->add_option("--p", co.p, "Field characteristic")->required();
  construct->add_option("--k", co.k, "Extension degree")->default_val(1);
  construct->add_option("--q", co.q, "Alphabet size")->required();
  construct->add_option("--d0", co.d0, "Truncation order, 1 <= d0 <= r-2")->required();
  construct->add_option("--composition", co.composition, "Symbol counts, e.g. 3,3,3")->required();
  construct->add_option("--out", co.out, "Output code file")->required();
  construct->add_option("--modulus", co.modulus, "Field modulus coefficients, constant term first");
  construct->add_option("--threads", co.threads, "Worker threads")->default_val(1)->check(CLI::PositiveNumber);
  construct->add_flag("--skip-verify", co.skip_verify, "Do not compute the exact minimum distance");

  BoundsOptions bo;
  auto* bounds = app.add_subcommand("bounds", "Report lower and upper bounds on the maximum code size");
  bounds->add_option("--q", bo.q, "Alphabet size")->required();
  bounds->add_option("--n", bo.n, "Code length")->required();
  bounds->add_option("--d", bo.d, "Minimum distance")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--composition", bo.composition, "Symbol counts")->required();
  bounds->add_option("--field", bo.field, "Field p^k for the residue construction (p^k = n)");
  bounds->add_option("--d0", bo.d0, "Truncation order for the residue construction");
  bounds->add_option("--format", bo.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Check a code file and compute its minimum distance");
  verify->add_option("--code", vo.code, "Code file")->required();
  verify->add_option("--expect-d", vo.expect_d, "Fail unless the minimum distance is at least this");
  verify->add_option("--threads", vo.threads, "Worker threads")->default_val(1)->check(CLI::PositiveNumber);

  OracleOptionsCli oo;
  auto* oracle = app.add_subcommand("oracle", "Exact maximum code size by clique search (small instances)");
  oracle->add_option("--q", oo.q, "Alphabet size")->required();
  oracle->add_option("--d", oo.d, "Minimum distance")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--composition", oo.composition, "Symbol counts")->required();
  oracle->add_option("--cap", oo.cap, "Maximum number of words in the space")->default_val(5000);
  oracle->add_option("--out", oo.out, "Write a witness code here");

  std::vector<const char*> argv{"ccc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (construct->parsed()) return cmd_construct(co, out, err);
    if (bounds->parsed()) return cmd_bounds(bo, out);
    if (verify->parsed()) return cmd_verify(vo, out, err);
    if (oracle->parsed()) return cmd_oracle(oo, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kInstanceTooLarge ? kOverBudget : kBadInput;
  }
  return kBadInput;
}

}  // namespace ccc::cli
