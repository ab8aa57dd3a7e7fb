#include "cubescheme/cls_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

namespace cubescheme {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ConceptClass parse_cls(std::string_view text) {
  int n = -1;
  std::vector<Word> words;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (n < 0) {
      if (line.substr(0, 2) != "n=") throw ParseError("expected header 'n=<int>'", line_no);
      const auto digits = trim(line.substr(2));
      int value = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ParseError("malformed dimension '" + std::string(digits) + "'", line_no);
      if (value < 1 || value > kMaxDimension) throw ParseError("dimension must lie in [1, 63]", line_no);
      n = value;
      continue;
    }

    if (line.size() != static_cast<std::size_t>(n))
      throw ParseError("expected " + std::to_string(n) + " bits, got " + std::to_string(line.size()), line_no);
    Word bits = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '1')
        bits |= Word{1} << i;
      else if (line[i] != '0')
        throw ParseError("invalid character '" + std::string(1, line[i]) + "'", line_no);
    }
    words.push_back(bits);
  }
  if (n < 0) throw ParseError("missing header 'n=<int>'", line_no);
  return ConceptClass(n, std::move(words));
}

ConceptClass read_cls(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_cls(text);
}

ConceptClass read_cls_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return read_cls(in);
}

std::string format_cls(const ConceptClass& c) {
  std::ostringstream out;
  write_cls(out, c);
  return out.str();
}

void write_cls(std::ostream& out, const ConceptClass& c) {
  out << "n=" << c.dim() << '\n';
  for (Word w : c) out << Vertex(c.dim(), w).str() << '\n';
}

void write_cls_file(const std::filesystem::path& path, const ConceptClass& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_cls(out, c);
}

}  // namespace cubescheme
