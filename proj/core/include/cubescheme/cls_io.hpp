#pragma once

// The ".cls" class text format:
//
//   n=<int>
//   <bitstring>      one vertex per line, leftmost character = coordinate 1
//   # comment        '#' starts a comment anywhere on a line
//
// Blank lines are skipped. The writer emits the header and the vertices in
// canonical order, so write(read(text)) == text for canonical input.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cubescheme/cube_core.hpp"

namespace cubescheme {

/// Throws ParseError carrying the offending line number.
ConceptClass parse_cls(std::string_view text);
ConceptClass read_cls(std::istream& in);
ConceptClass read_cls_file(const std::filesystem::path& path);

std::string format_cls(const ConceptClass& c);
void write_cls(std::ostream& out, const ConceptClass& c);
void write_cls_file(const std::filesystem::path& path, const ConceptClass& c);

}  // namespace cubescheme
