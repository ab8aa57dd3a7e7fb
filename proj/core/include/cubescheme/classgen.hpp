#pragma once

// Seeded generators for the class families used throughout the tests and
// the bench. Every generator is a pure function of its GenSpec.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubescheme/cube_core.hpp"

namespace cubescheme {

enum class Family {
  full_cube,
  hamming_ball,
  downward_closed,
  random_intersection_closed,
  monomial_union,
  hyperrectangle,
  tree,
  random_extremal_vc2,
  random_maximum,
};

std::string to_string(Family f);
/// Throws PreconditionError on an unknown tag.
Family family_from_string(const std::string& tag);
std::vector<Family> all_families();

struct GenSpec {
  Family family = Family::full_cube;
  int n = 1;
  /// VC target: ball radius, weight cap, VC cap, or part-size cap, by family.
  int d = 1;
  /// Fraction of the cube sampled as generators (random families).
  double density = 0.1;
  std::uint64_t seed = 0;
  /// Integer points for hyperrectangle; n is then the number of points.
  std::vector<std::vector<int>> points;
};

/// Throws PreconditionError on parameters outside the family's domain.
void validate(const GenSpec& spec);

ConceptClass generate(const GenSpec& spec);

/// Reads one integer point per row, comma separated.
std::vector<std::vector<int>> parse_points_csv(const std::string& text);

struct GeneratedClass {
  GenSpec spec;
  ConceptClass cls;
};

/// Per-family instance counts; n and d are drawn per instance from
/// [n_min, n_max] and [1, d_max].
struct SuiteSpec {
  std::uint64_t seed = 0;
  std::map<Family, int> counts;
  int n_min = 2;
  int n_max = 8;
  int d_max = 3;
};

std::vector<GeneratedClass> generate_suite(const SuiteSpec& spec);

/// Intersection-closed instances cycling through the downward_closed,
/// random_intersection_closed, monomial_union and hyperrectangle families,
/// each with VC dimension in [0, d_max] and n in [n_min, n_max].
std::vector<GeneratedClass> intersection_closed_sweep(std::uint64_t seed, std::size_t count, int n_min = 3,
                                                      int n_max = 12, int d_max = 3);

}  // namespace cubescheme
