#include <doctest.h>

#include "cubescheme/serialize.hpp"

using namespace cubescheme;

TEST_CASE("class json") {
  const auto c = ConceptClass::from_strings(3, {"110", "000", "011"});
  const auto j = class_to_json(c);
  CHECK(j.dump() == R"({"n":3,"vertices":["000","110","011"]})");
}

TEST_CASE("class report") {
  const auto r = classify(ConceptClass::full_cube(2));
  const auto j = to_json(r);
  CHECK(j["n"] == 2);
  CHECK(j["cardinality"] == 4);
  CHECK(j["vc_dimension"] == 2);
  CHECK(j["shattered_count"] == 4);
  CHECK(j["cube_type_count"] == 4);
  CHECK(j["sauer_bound"] == 4);
  CHECK(j["is_maximum"] == true);
  CHECK(j["is_extremal"] == true);
  const auto text = to_text(r);
  CHECK(text.find("vc_dimension=2\n") != std::string::npos);
  CHECK(text.find("extremal=true\n") != std::string::npos);
  CHECK(text.rfind("n=2\n", 0) == 0);
}

TEST_CASE("certificate round trip") {
  const auto c = ConceptClass::from_strings(2, {"00", "01", "10"});
  const auto cert = k_close_condition(c, 1);
  REQUIRE(cert);
  const auto j = to_json(*cert);
  CHECK(j["k"] == 1);
  CHECK(j["v"] == "11");
  const auto back = certificate_from_json(j, 2);
  CHECK(back.k == cert->k);
  CHECK(back.centre == cert->centre);
  CHECK(back.cubes == cert->cubes);
  CHECK_THROWS_AS(certificate_from_json(Json{{"k", 1}}, 2), ParseError);
  CHECK_THROWS_AS(certificate_from_json(Json{{"k", 1}, {"v", "1x"}, {"cubes", Json::array()}}, 2), ParseError);
}

TEST_CASE("scheme documents") {
  RepresentationMap r(2);
  r.assign(0b00, CoordSet::from_coords({2}));
  r.assign(0b11, CoordSet::from_coords({1}));
  r.assign(0b10, CoordSet());
  const auto j = scheme_to_json(r, 1);
  CHECK(j.dump() ==
        R"({"n":2,"k":1,"entries":[{"vertex":"00","rep":[2]},{"vertex":"01","rep":[]},{"vertex":"11","rep":[1]}]})");
  const auto doc = parse_scheme(j.dump());
  CHECK(doc.k == 1);
  CHECK(doc.map == r);
  CHECK_THROWS_AS(parse_scheme("{"), ParseError);
  CHECK_THROWS_AS(parse_scheme(R"({"n":2,"k":1,"entries":[{"vertex":"0","rep":[]}]})"), ParseError);
  CHECK_THROWS_AS(parse_scheme(R"({"n":2,"k":1,"entries":[{"vertex":"00","rep":[3]}]})"), ParseError);
  CHECK_THROWS_AS(parse_scheme(R"({"n":2,"k":1,"entries":[{"vertex":"00","rep":[1]},{"vertex":"00","rep":[2]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_scheme(R"([1,2])"), ParseError);
}

TEST_CASE("embedding report") {
  const auto c = ConceptClass::from_strings(4, {"0000", "1100", "1111"});
  const auto rep = verify_embedding(c, shortest_path_closure(c, CoordinateOrdering::identity(4)));
  const auto j = to_json(rep);
  CHECK(j["intersection_closed"] == false);
  CHECK(j["violations"].size() == rep.violations.size());
  CHECK(to_text(rep).find("intersection_closed=false") != std::string::npos);
}

TEST_CASE("generator specs") {
  GenSpec s{Family::hyperrectangle, 2, 1, 0.25, 42, {{0, 1}, {3, -2}}};
  const auto back = genspec_from_json(to_json(s));
  CHECK(back.family == s.family);
  CHECK(back.n == s.n);
  CHECK(back.d == s.d);
  CHECK(back.density == s.density);
  CHECK(back.seed == s.seed);
  CHECK(back.points == s.points);

  const auto partial = genspec_from_json(Json::parse(R"({"family":"tree","n":5})"));
  CHECK(partial.family == Family::tree);
  CHECK(partial.n == 5);
  CHECK(partial.seed == 0);
  CHECK_THROWS_AS(genspec_from_json(Json::parse(R"({"family":"blob"})")), ParseError);
  CHECK_THROWS_AS(genspec_from_json(Json::parse(R"({"n":"five"})")), ParseError);
}
