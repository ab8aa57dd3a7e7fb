#include "cubescheme/serialize.hpp"

#include <sstream>

namespace cubescheme {

namespace {

Json coords_json(CoordSet s) {
  Json out = Json::array();
  for (int c : s.coords()) out.push_back(c);
  return out;
}

CoordSet coords_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("coordinate list must be an array", 0);
  std::vector<int> coords;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw ParseError("coordinate must be an integer", 0);
    const int v = c.get<int>();
    if (v < 1 || v > n) throw ParseError("coordinate " + std::to_string(v) + " outside [1, n]", 0);
    coords.push_back(v);
  }
  try {
    return CoordSet::from_coords(coords);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

Json class_to_json(const ConceptClass& c) {
  Json vertices = Json::array();
  for (Word w : c) vertices.push_back(Vertex(c.dim(), w).str());
  return Json{{"n", c.dim()}, {"vertices", vertices}};
}

Json to_json(const ClassReport& r) {
  Json j;
  j["n"] = r.n;
  j["cardinality"] = r.cardinality;
  j["vc_dimension"] = r.vc_dimension;
  j["shattered_count"] = r.shattered_count;
  j["cube_type_count"] = r.cube_type_count;
  j["is_maximum"] = r.is_maximum;
  j["is_extremal"] = r.is_extremal;
  j["sauer_bound"] = r.sauer_bound_value;
  return j;
}

std::string to_text(const ClassReport& r) {
  std::ostringstream out;
  out << "n=" << r.n << '\n'
      << "size=" << r.cardinality << '\n'
      << "vc_dimension=" << r.vc_dimension << '\n'
      << "shattered_sets=" << r.shattered_count << '\n'
      << "cube_types=" << r.cube_type_count << '\n'
      << "sauer_bound=" << r.sauer_bound_value << '\n'
      << "maximum=" << yes_no(r.is_maximum) << '\n'
      << "extremal=" << yes_no(r.is_extremal) << '\n';
  return out.str();
}

Json to_json(const KCloseCertificate& cert) {
  Json j;
  j["k"] = cert.k;
  j["v"] = cert.centre.str();
  Json cubes = Json::array();
  for (const auto& cube : cert.cubes) {
    Json anchor = Json::object();
    const CoordSet domain = cube.anchor_domain();
    for (int c : domain.coords()) anchor[std::to_string(c)] = static_cast<int>((cube.anchor() >> (c - 1)) & 1U);
    cubes.push_back(Json{{"colours", coords_json(cube.colours())}, {"anchor", anchor}});
  }
  j["cubes"] = cubes;
  return j;
}

KCloseCertificate certificate_from_json(const Json& j, int n) {
  try {
    KCloseCertificate cert;
    cert.k = j.at("k").get<int>();
    cert.centre = Vertex::parse(j.at("v").get<std::string>());
    if (cert.centre.dim() != n) throw ParseError("centre has the wrong dimension", 0);
    for (const auto& cj : j.at("cubes")) {
      const CoordSet colours = coords_from_json(cj.at("colours"), n);
      Word anchor = 0;
      for (const auto& [key, bit] : cj.at("anchor").items()) {
        const int c = std::stoi(key);
        if (c < 1 || c > n || colours.contains(c)) throw ParseError("bad anchor coordinate " + key, 0);
        if (bit.get<int>() != 0) anchor |= Word{1} << (c - 1);
      }
      cert.cubes.emplace_back(n, colours, anchor);
    }
    return cert;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what(), 0);
  }
}

Json to_json(const EmbeddingReport& r) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["d_star"] = r.d_star;
  j["size"] = r.size;
  j["size_star"] = r.size_star;
  j["ratio"] = r.ratio();
  j["intersection_closed"] = r.intersection_closed;
  j["shortest_path_closed"] = r.shortest_path_closed;
  j["extremal"] = r.extremal;
  j["vc_within_bound"] = r.vc_within_bound;
  j["size_within_bound"] = r.size_within_bound;
  j["violations"] = r.violations;
  return j;
}

std::string to_text(const EmbeddingReport& r) {
  std::ostringstream out;
  out << "n=" << r.n << '\n'
      << "d=" << r.d << '\n'
      << "d_star=" << r.d_star << '\n'
      << "size=" << r.size << '\n'
      << "size_star=" << r.size_star << '\n'
      << "intersection_closed=" << yes_no(r.intersection_closed) << '\n'
      << "shortest_path_closed=" << yes_no(r.shortest_path_closed) << '\n'
      << "extremal=" << yes_no(r.extremal) << '\n'
      << "vc_within_bound=" << yes_no(r.vc_within_bound) << '\n'
      << "size_within_bound=" << yes_no(r.size_within_bound) << '\n';
  for (const auto& v : r.violations) out << "violation: " << v << '\n';
  return out.str();
}

Json scheme_to_json(const RepresentationMap& r, int k) {
  Json j;
  j["n"] = r.dim();
  j["k"] = k;
  Json entries = Json::array();
  for (const auto& [w, rep] : r.entries())
    entries.push_back(Json{{"vertex", Vertex(r.dim(), w).str()}, {"rep", coords_json(rep)}});
  j["entries"] = entries;
  return j;
}

SchemeDocument scheme_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > kMaxDimension) throw ParseError("n outside [0, 63]", 0);
    SchemeDocument doc{RepresentationMap(n), j.at("k").get<int>()};
    for (const auto& e : j.at("entries")) {
      const Vertex v = Vertex::parse(e.at("vertex").get<std::string>());
      if (v.dim() != n) throw ParseError("entry " + v.str() + " has the wrong length", 0);
      if (doc.map.lookup(v.bits())) throw ParseError("duplicate entry " + v.str(), 0);
      doc.map.assign(v.bits(), coords_from_json(e.at("rep"), n));
    }
    return doc;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("scheme: ") + e.what(), 0);
  }
}

SchemeDocument parse_scheme(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("scheme: ") + e.what(), 0);
  }
  return scheme_from_json(j);
}

Json to_json(const GenSpec& s) {
  Json j;
  j["family"] = to_string(s.family);
  j["n"] = s.n;
  j["d"] = s.d;
  j["density"] = s.density;
  j["seed"] = s.seed;
  if (!s.points.empty()) j["points"] = s.points;
  return j;
}

GenSpec genspec_from_json(const Json& j) {
  GenSpec s;
  try {
    if (!j.is_object()) throw ParseError("config must be an object", 0);
    if (j.contains("family")) s.family = family_from_string(j.at("family").get<std::string>());
    if (j.contains("n")) s.n = j.at("n").get<int>();
    if (j.contains("d")) s.d = j.at("d").get<int>();
    if (j.contains("density")) s.density = j.at("density").get<double>();
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("points")) s.points = j.at("points").get<std::vector<std::vector<int>>>();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("config: ") + e.what(), 0);
  }
  return s;
}

}  // namespace cubescheme
