#include "ccc/code_file.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "ccc/error.hpp"

namespace ccc {
namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kMalformedCodeFile, "line " + std::to_string(line) + ": " + what);
}

std::optional<std::uint32_t> parse_uint(std::string_view s) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

void write_code_file(std::ostream& out, const CodeFile& file) {
  out << "# q=" << file.q() << "\n";
  out << "# n=" << file.n() << "\n";
  out << "# composition=" << file.comp.to_string() << "\n";
  if (file.field) out << "# field=" << *file.field << "\n";
  if (file.d0) out << "# d0=" << *file.d0 << "\n";
  if (file.has_guaranteed_d) {
    out << "# guaranteed_d=" << (file.guaranteed_d ? std::to_string(*file.guaranteed_d) : "none") << "\n";
  }
  for (const auto& w : file.words) out << format_word(w) << "\n";
}

std::string format_code_file(const CodeFile& file) {
  std::ostringstream os;
  write_code_file(os, file);
  return os.str();
}

CodeFile parse_code_file(const std::string& text) {
  std::map<std::string, std::string> header;
  std::vector<std::string> body;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::size_t body_start_line = 0;
  while (pos < text.size()) {
    ++line_no;
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) malformed(line_no, "missing trailing newline");
    std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (!line.empty() && line.front() == '#') {
      if (!body.empty()) malformed(line_no, "header line after body");
      std::string_view kv(line);
      kv.remove_prefix(1);
      while (!kv.empty() && kv.front() == ' ') kv.remove_prefix(1);
      const auto eq = kv.find('=');
      if (eq == std::string_view::npos) malformed(line_no, "header line without '='");
      std::string key(kv.substr(0, eq));
      static const std::set<std::string> known{"q", "n", "composition", "field", "d0", "guaranteed_d"};
      if (!known.count(key)) malformed(line_no, "unknown header key '" + key + "'");
      if (!header.emplace(key, std::string(kv.substr(eq + 1))).second) {
        malformed(line_no, "duplicate header key '" + key + "'");
      }
      continue;
    }
    if (line.empty()) malformed(line_no, "blank line");
    if (body.empty()) body_start_line = line_no;
    body.push_back(std::move(line));
  }

  for (const char* key : {"q", "n", "composition"}) {
    if (!header.count(key)) malformed(line_no, std::string("missing header '") + key + "'");
  }
  const auto q = parse_uint(header["q"]);
  const auto n = parse_uint(header["n"]);
  if (!q || *q < 2 || *q > 10) malformed(1, "q must be an integer in [2, 10]");
  if (!n) malformed(1, "n must be a nonnegative integer");

  std::optional<Composition> comp;
  try {
    comp = Composition::parse(header["composition"]);
  } catch (const Error& e) {
    malformed(1, e.what());
  }
  if (comp->q() != *q) malformed(1, "composition has " + std::to_string(comp->q()) + " entries but q=" + header["q"]);
  if (comp->n() != *n) malformed(1, "composition sums to " + std::to_string(comp->n()) + " but n=" + header["n"]);

  CodeFile file{*comp, std::nullopt, std::nullopt, false, std::nullopt, {}};
  if (auto it = header.find("field"); it != header.end()) {
    const auto caret = it->second.find('^');
    if (caret == std::string::npos || !parse_uint(std::string_view(it->second).substr(0, caret)) ||
        !parse_uint(std::string_view(it->second).substr(caret + 1))) {
      malformed(1, "field must look like p^k");
    }
    file.field = it->second;
  }
  if (auto it = header.find("d0"); it != header.end()) {
    file.d0 = parse_uint(it->second);
    if (!file.d0) malformed(1, "d0 must be an integer");
  }
  if (auto it = header.find("guaranteed_d"); it != header.end()) {
    file.has_guaranteed_d = true;
    if (it->second != "none") {
      file.guaranteed_d = parse_uint(it->second);
      if (!file.guaranteed_d) malformed(1, "guaranteed_d must be an integer or none");
    }
  }

  std::set<std::string> seen;
  file.words.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    const std::size_t at = body_start_line + i;
    const std::string& line = body[i];
    if (line.size() != *n) malformed(at, "word has length " + std::to_string(line.size()) + ", expected " + header["n"]);
    Word w;
    w.reserve(line.size());
    for (char c : line) {
      if (c < '0' || c >= static_cast<char>('0' + *q)) malformed(at, std::string("symbol '") + c + "' outside alphabet");
      w.push_back(static_cast<Symbol>(c - '0'));
    }
    if (!seen.insert(line).second) malformed(at, "duplicate word " + line);
    if (!comp->matches(w)) malformed(at, "word " + line + " does not match composition");
    file.words.push_back(std::move(w));
  }
  return file;
}

CodeFile read_code_file(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_code_file(text);
}

}  // namespace ccc
