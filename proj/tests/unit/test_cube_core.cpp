#include <doctest.h>

#include <random>

#include "cubescheme/cube_core.hpp"
#include "oracles.hpp"

using namespace cubescheme;

namespace {

Vertex v(const char* s) { return Vertex::parse(s); }

ConceptClass cls(int n, std::initializer_list<std::string_view> rows) { return ConceptClass::from_strings(n, rows); }

}  // namespace

TEST_CASE("bit packing") {
  CHECK(extract_bits(0b101101, 0b001110) == 0b110);
  CHECK(deposit_bits(0b110, 0b001110) == 0b001100);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Word w = rng(), m = rng();
    CHECK(deposit_bits(extract_bits(w, m), m) == (w & m));
  }
}

TEST_CASE("coordinate sets") {
  const auto s = CoordSet::from_coords({3, 1});
  CHECK(s.coords() == std::vector<int>{1, 3});
  CHECK(s.str() == "{1,3}");
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK_THROWS_AS(CoordSet::from_coords({0}), PreconditionError);
  CHECK_THROWS_AS(CoordSet::from_coords({64}), PreconditionError);
  // size first, then lexicographic coordinate lists
  CHECK(CoordSet::from_coords({3}) < CoordSet::from_coords({1, 2}));
  CHECK(CoordSet::from_coords({1, 3}) < CoordSet::from_coords({2, 3}));
  CHECK(CoordSet::from_coords({1, 2}) < CoordSet::from_coords({1, 3}));
}

TEST_CASE("vertices") {
  CHECK(v("1101").str() == "1101");
  CHECK(v("1101").at(1));
  CHECK_FALSE(v("1101").at(3));
  CHECK(v("1101").weight() == 3);
  CHECK_THROWS_AS(Vertex::parse("10a"), PreconditionError);
  CHECK_THROWS_AS(Vertex(2, 0b100), PreconditionError);
  CHECK_THROWS_AS(Vertex(64, 0), PreconditionError);

  CHECK(hamming(v("0000"), v("0000")) == 0);
  CHECK(hamming(v("00"), v("11")) == 2);
  CHECK(hamming(v("1101"), v("0100")) == 2);
  CHECK_THROWS_AS(hamming(v("00"), v("000")), DimensionMismatch);

  CHECK(intersect(v("110"), v("101")) == v("100"));
  CHECK(intersect(v("111"), v("000")) == v("000"));
  CHECK(intersect(v("0110"), v("0110")) == v("0110"));

  CHECK(leq(v("100"), v("110")));
  CHECK(leq(v("101"), v("101")));
  CHECK_FALSE(leq(v("010"), v("101")));
}

TEST_CASE("lattice and metric properties") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Vertex a(n, rng() & low_mask(n)), b(n, rng() & low_mask(n)), c(n, rng() & low_mask(n));
    CHECK(hamming(a, c) <= hamming(a, b) + hamming(b, c));
    CHECK(hamming(a, b) == hamming(b, a));
    const Vertex m = intersect(a, b);
    CHECK(leq(m, a));
    CHECK(leq(m, b));
    const CoordSet j(rng() & low_mask(n));
    CHECK(project_word(m.bits(), j) == (project_word(a.bits(), j) & project_word(b.bits(), j)));
  }
}

TEST_CASE("concept classes are canonical") {
  const ConceptClass c(3, std::vector<Word>{5, 1, 5, 0});
  CHECK(c.size() == 3);
  CHECK(std::vector<Word>(c.begin(), c.end()) == std::vector<Word>{0, 1, 5});
  CHECK(c.index_of(5) == 2);
  CHECK(c.index_of(4) == c.size());
  CHECK_THROWS_AS(ConceptClass(2, std::vector<Word>{4}), PreconditionError);
  CHECK(c.with(2).size() == 4);
  CHECK(c.without(1).size() == 2);
  CHECK(ConceptClass::full_cube(3).size() == 8);
  CHECK(ConceptClass(0, std::vector<Word>{0}).size() == 1);
}

TEST_CASE("projection") {
  CHECK(project(cls(2, {"00", "01", "10"}), CoordSet::from_coords({1})) == cls(1, {"0", "1"}));
  const auto c = cls(3, {"000", "110", "101", "011"});
  CHECK(project(c, CoordSet::full(3)) == c);
  CHECK(project(c, CoordSet::from_coords({1, 2})) == ConceptClass::full_cube(2));
  CHECK(project(c, CoordSet()) == ConceptClass(0, std::vector<Word>{0}));
  CHECK_THROWS_AS(project(c, CoordSet::from_coords({4})), PreconditionError);
}

TEST_CASE("complement") {
  CHECK(complement(ConceptClass::full_cube(2)).empty());
  CHECK(complement(cls(2, {"00", "01", "10"})) == cls(2, {"11"}));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto c = oracle::random_class(rng, 5, 0.4);
    CHECK(complement(complement(c)) == c);
    CHECK(c.size() + complement(c).size() == 32);
  }
}

TEST_CASE("one-inclusion edges") {
  const auto e = one_inclusion_edges(cls(2, {"00", "01", "10"}));
  REQUIRE(e.size() == 2);
  CHECK(e[0] == Edge{v("00"), v("10"), 1});
  CHECK(e[1] == Edge{v("00"), v("01"), 2});
  CHECK(one_inclusion_edges(cls(3, {"101"})).empty());
  CHECK(one_inclusion_edges(ConceptClass::full_cube(2)).size() == 4);
}

TEST_CASE("cube enumeration") {
  const auto square = enumerate_cubes(ConceptClass::full_cube(2), true);
  REQUIRE(square.size() == 1);
  CHECK(square[0].str() == "**");

  const auto tri = enumerate_cubes(cls(2, {"00", "01", "10"}), true);
  REQUIRE(tri.size() == 2);
  CHECK(tri[0].colours() == CoordSet::from_coords({1}));
  CHECK(tri[1].colours() == CoordSet::from_coords({2}));

  const auto parity = enumerate_cubes(cls(3, {"000", "110", "101", "011"}), false);
  CHECK(parity.size() == 4);
  for (const auto& q : parity) CHECK(q.dim() == 0);

  SUBCASE("agrees with a brute-force scan") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 120; ++i) {
      const int n = 1 + static_cast<int>(rng() % 5);
      const auto c = oracle::random_class(rng, n, 0.6);
      const auto expected = oracle::all_cubes(c);
      std::size_t total = 0;
      for (const auto& [colours, anchors] : expected) total += anchors.size();
      const auto got = enumerate_cubes(c, false);
      CHECK(got.size() == total);
      for (const auto& q : got) {
        CHECK(q.subset_of(c));
        const auto& anchors = expected.at(q.colours().mask());
        CHECK(std::find(anchors.begin(), anchors.end(), q.anchor()) != anchors.end());
      }
      CHECK(cube_types(c).size() == expected.size());
      for (const auto& q : enumerate_cubes(c, true))
        for (const auto& r : got)
          if (r.dim() > q.dim()) CHECK_FALSE((q.colours().subset_of(r.colours()) && r.contains(q.anchor())));
    }
  }
}

TEST_CASE("cube rendering and membership") {
  const Cube q(4, CoordSet::from_coords({2, 4}), 0b0001);
  CHECK(q.str() == "1*0*");
  CHECK(q.words() == std::vector<Word>{0b0001, 0b0011, 0b1001, 0b1011});
  CHECK(q.contains(0b1011));
  CHECK_FALSE(q.contains(0b0101));
  CHECK_THROWS_AS(Cube(4, CoordSet::from_coords({2}), 0b0010), PreconditionError);
}

TEST_CASE("shortest-path closure check") {
  CHECK(is_shortest_path_closed(cls(2, {"00", "01", "11"})));
  CHECK(is_shortest_path_closed(cls(3, {"101"})));
  const auto parity = cls(3, {"000", "110", "101", "011"});
  const auto res = check_shortest_path_closed(parity);
  CHECK_FALSE(res.closed);
  REQUIRE(res.witness);
  // The reported pair must itself be a violation, and so is (110, 101).
  const auto bad = [&](Word a, Word b) {
    return oracle::bfs(parity, a).count(b) == 0 || oracle::bfs(parity, a).at(b) != std::popcount(a ^ b);
  };
  CHECK(bad(res.witness->first.bits(), res.witness->second.bits()));
  CHECK(bad(v("110").bits(), v("101").bits()));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto c = oracle::random_class(rng, n, 0.3 + 0.1 * static_cast<double>(i % 6));
    CHECK(is_shortest_path_closed(c) == oracle::is_shortest_path_closed(c));
  }
}

TEST_CASE("reduction and tail") {
  auto rt = reduction_tail(ConceptClass::full_cube(2), CoordSet::from_coords({1}));
  CHECK(rt.reduction == cls(1, {"0", "1"}));
  CHECK(rt.tail.empty());
  rt = reduction_tail(cls(2, {"00", "01", "10"}), CoordSet::from_coords({1}));
  CHECK(rt.reduction == cls(1, {"0"}));
  CHECK(rt.tail == cls(1, {"1"}));
  CHECK(reduction_tail(cls(3, {"010"}), CoordSet::from_coords({2})).reduction.empty());

  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto c = oracle::random_class(rng, 5, 0.5);
    const CoordSet j(rng() & low_mask(5));
    const auto parts = reduction_tail(c, j);
    CHECK(set_union(parts.reduction, parts.tail) == project(c, j));
    CHECK(parts.reduction.size() + parts.tail.size() == project(c, j).size());
  }
}
