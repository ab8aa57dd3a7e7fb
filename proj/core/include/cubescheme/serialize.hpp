#pragma once

// JSON and text forms of the library's reports and artifacts.

#include <string>

#include <nlohmann/json.hpp>

#include "cubescheme/classgen.hpp"
#include "cubescheme/closure.hpp"
#include "cubescheme/compression.hpp"
#include "cubescheme/spc.hpp"
#include "cubescheme/vc_analysis.hpp"

namespace cubescheme {

using Json = nlohmann::ordered_json;

/// {n, vertices: [bitstrings]} in canonical order.
Json class_to_json(const ConceptClass& c);

Json to_json(const ClassReport& r);
/// key=value lines in a fixed order.
std::string to_text(const ClassReport& r);

/// {k, v, cubes: [{colours: [...], anchor: {coord: bit}}]}
Json to_json(const KCloseCertificate& cert);
/// Throws ParseError on a malformed document.
KCloseCertificate certificate_from_json(const Json& j, int n);

Json to_json(const EmbeddingReport& r);
std::string to_text(const EmbeddingReport& r);

/// {n, k, entries: [{vertex: bitstring, rep: [ints]}]}, entries in word order.
Json scheme_to_json(const RepresentationMap& r, int k);

struct SchemeDocument {
  RepresentationMap map;
  int k = 0;
};

/// Throws ParseError on malformed JSON or entries.
SchemeDocument scheme_from_json(const Json& j);
SchemeDocument parse_scheme(const std::string& text);

Json to_json(const GenSpec& s);
/// Missing keys keep their GenSpec defaults. Throws ParseError on bad types
/// or an unknown family.
GenSpec genspec_from_json(const Json& j);

}  // namespace cubescheme
