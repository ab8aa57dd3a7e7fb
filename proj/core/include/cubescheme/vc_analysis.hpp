#pragma once

#include <cstdint>
#include <vector>

#include "cubescheme/cube_core.hpp"

namespace cubescheme {

/// Summary of a class's shattering and cube structure.
///
/// When is_extremal holds, cardinality == shattered_count == cube_type_count.
struct ClassReport {
  int n = 0;
  std::uint64_t cardinality = 0;
  int vc_dimension = -1;  // -1 for the empty class
  std::uint64_t shattered_count = 0;
  std::uint64_t cube_type_count = 0;
  bool is_maximum = false;
  bool is_extremal = false;
  std::uint64_t sauer_bound_value = 0;

  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

/// True iff the projection of c onto `coords` is the full |coords|-cube.
bool shatters(const ConceptClass& c, CoordSet coords);

/// All shattered coordinate sets, ascending by size then lexicographically.
/// Supersets of a non-shattered set are never tested.
std::vector<CoordSet> shattered_sets(const ConceptClass& c);

/// Largest shattered set size, or -1 for the empty class.
int vc_dimension(const ConceptClass& c);

/// Number of subsets of [n] with at most d elements. Throws on d outside
/// [0, n] or on 64-bit overflow.
std::uint64_t sauer_bound(int n, int d);

std::uint64_t binomial(int n, int k);

/// True iff c contains a subcube with colour set exactly `coords`.
bool has_cube_with_colours(const ConceptClass& c, CoordSet coords);

ClassReport classify(const ConceptClass& c);

inline bool is_extremal(const ConceptClass& c) { return classify(c).is_extremal; }

/// d-complete check: exactly C(n, d) cubes, every d-subset of [n] realised
/// once as a colour set. Throws PreconditionError on mixed dimensions.
bool is_complete_collection(const std::vector<Cube>& cubes, int n, int d);

}  // namespace cubescheme
