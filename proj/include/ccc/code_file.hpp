#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccc/composition.hpp"

namespace ccc {

/// On-disk code: '#'-prefixed header lines followed by one word per line.
///
///   # q=3
///   # n=9
///   # composition=3,3,3
///   # field=3^2          (optional)
///   # d0=3               (optional)
///   # guaranteed_d=5     (optional, integer or "none")
///   000111222
///   ...
///
/// Body lines are exactly n digits below q (q <= 10), newline-terminated, with
/// no blank lines and no duplicates.
struct CodeFile {
  Composition comp;
  std::optional<std::string> field;  // "p^k"
  std::optional<std::uint32_t> d0;
  bool has_guaranteed_d = false;
  std::optional<std::uint32_t> guaranteed_d;
  std::vector<Word> words;

  std::uint32_t q() const { return comp.q(); }
  std::uint32_t n() const { return comp.n(); }
};

void write_code_file(std::ostream& out, const CodeFile& file);
std::string format_code_file(const CodeFile& file);

/// Throws MalformedCodeFile on any header or body violation, including words
/// that do not match the declared composition.
CodeFile read_code_file(std::istream& in);
CodeFile parse_code_file(const std::string& text);

}  // namespace ccc
