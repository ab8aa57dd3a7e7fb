#include <doctest.h>

#include <random>

#include "cubescheme/closure.hpp"
#include "cubescheme/vc_analysis.hpp"
#include "oracles.hpp"

using namespace cubescheme;

namespace {

ConceptClass cls(int n, std::initializer_list<std::string_view> rows) { return ConceptClass::from_strings(n, rows); }

ConceptClass from_set(int n, const std::set<Word>& s) { return ConceptClass(n, std::vector<Word>(s.begin(), s.end())); }

}  // namespace

TEST_CASE("intersection closure") {
  CHECK(intersection_closure(cls(3, {"110", "101", "011"})) ==
        cls(3, {"110", "101", "011", "100", "010", "001", "000"}));
  const auto ic = cls(3, {"110", "011", "010", "000"});
  CHECK(is_intersection_closed(ic));
  CHECK(intersection_closure(ic) == ic);
  CHECK_THROWS_AS(intersection_closure(ConceptClass(3)), PreconditionError);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto c = oracle::random_class(rng, n, 0.15);
    const auto closed = intersection_closure(c);
    CHECK(closed == from_set(n, oracle::intersection_closure(c)));
    CHECK(is_intersection_closed(closed));
    CHECK(is_intersection_closed(closed) == oracle::is_intersection_closed(closed));
    CHECK(is_intersection_closed(c) == oracle::is_intersection_closed(c));
  }
}

TEST_CASE("closure commutes with projection") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto c = oracle::random_class(rng, n, 0.05 + 0.05 * static_cast<double>(i % 4));
    const CoordSet j(rng() & low_mask(n));
    CHECK(intersection_closure(project(c, j)) == project(intersection_closure(c), j));
  }
}

TEST_CASE("closure of a shortest-path closed class stays shortest-path closed") {
  std::mt19937_64 rng(47);
  int tested = 0;
  for (int i = 0; i < 3000 && tested < 150; ++i) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto c = oracle::random_class(rng, n, 0.3 + 0.1 * static_cast<double>(i % 5));
    if (!is_shortest_path_closed(c)) continue;
    ++tested;
    CHECK(oracle::is_shortest_path_closed(intersection_closure(c)));
  }
  CHECK(tested >= 100);
}

TEST_CASE("reorient") {
  const auto c = cls(3, {"000", "110", "011"});
  CHECK(reorient(c, Vertex(3, 0)) == c);
  CHECK(reorient(cls(2, {"11"}), Vertex::parse("11")) == cls(2, {"00"}));
  CHECK(reorient(reorient(c, Vertex::parse("101")), Vertex::parse("101")) == c);
  CHECK_THROWS_AS(reorient(c, Vertex::parse("10")), DimensionMismatch);
}

TEST_CASE("minimum closure VC over origins") {
  const auto tri = cls(2, {"00", "01", "10"});
  const auto best = min_closure_vc_bruteforce(tri);
  CHECK(best.vc_dimension == 1);
  CHECK(best.origin == Vertex(2, 0));
  for (int n = 1; n <= 4; ++n) CHECK(min_closure_vc_bruteforce(ConceptClass::full_cube(n)).vc_dimension == n);
  CHECK_THROWS_AS(min_closure_vc_bruteforce(ConceptClass(17, std::vector<Word>{0})), GuardError);
  CHECK(min_closure_vc_bruteforce(ConceptClass(17, std::vector<Word>{0}), true).vc_dimension == 0);
}

TEST_CASE("k-close cube condition") {
  const auto tri = cls(2, {"00", "01", "10"});
  const auto cert = k_close_condition(tri, 1);
  REQUIRE(cert);
  CHECK(cert->centre == Vertex::parse("11"));
  REQUIRE(cert->cubes.size() == 1);
  CHECK(cert->cubes[0].str() == "11");
  CHECK(verify_k_close_certificate(tri, *cert));
  CHECK_FALSE(k_close_condition(tri, 0));
  CHECK(min_k_close(tri) == 1);
  for (int n = 1; n <= 4; ++n) CHECK(min_k_close(ConceptClass::full_cube(n)) == n);

  const auto vacuous = k_close_condition(tri, 5);
  REQUIRE(vacuous);
  CHECK(vacuous->cubes.empty());
  CHECK_THROWS_AS(k_close_condition(tri, -1), PreconditionError);

  SUBCASE("tampered certificates are rejected") {
    auto bad = *cert;
    bad.cubes[0] = Cube(2, CoordSet(), 0b01);  // "10" lies in the class
    CHECK_FALSE(verify_k_close_certificate(tri, bad));
    bad = *cert;
    bad.cubes.clear();
    CHECK_FALSE(verify_k_close_certificate(tri, bad));
  }
}

TEST_CASE("k-close search agrees with direct search and the closure sweep") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 250; ++i) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto c = oracle::random_class(rng, n, 0.2 + 0.15 * static_cast<double>(i % 5));
    const int k = min_k_close(c);
    CHECK(k == oracle::min_closure_vc(c));
    CHECK(k == min_closure_vc_bruteforce(c).vc_dimension);
    for (int j = 0; j <= n; ++j) {
      const auto cert = k_close_condition(c, j);
      CHECK(cert.has_value() == oracle::k_close(c, j));
      if (cert) CHECK(verify_k_close_certificate(c, *cert));
      if (j >= k) CHECK(cert.has_value());
    }
  }
}
