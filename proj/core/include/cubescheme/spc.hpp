#pragma once

// Shortest-path closure of intersection-closed classes.
//
// For every ordered pair w < v in an intersection-closed class, the
// canonical monotone path from v down to w is added. The path clears, one
// at a time, the coordinates where the current vertex exceeds w, earliest
// first under a fixed coordinate ordering. The result is meant to be
// intersection closed, shortest-path closed and extremal, with VC dimension
// at most 11 times that of the input. verify_embedding checks each of these;
// the first three can fail, e.g. on {0000, 1100, 1111} with the identity
// ordering, where 1101 and 0111 are added but 0101 is not.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubescheme/cube_core.hpp"

namespace cubescheme {

/// A permutation of [n]; position 0 is cleared first.
class CoordinateOrdering {
 public:
  CoordinateOrdering() = default;
  /// From 1-based coordinates; throws unless a permutation of [n].
  explicit CoordinateOrdering(std::vector<int> order);

  static CoordinateOrdering identity(int n);
  /// Fisher-Yates shuffle driven by a seeded 64-bit Mersenne twister.
  static CoordinateOrdering shuffled(int n, std::uint64_t seed);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const noexcept { return order_; }
  /// First coordinate of `mask` under this ordering, 1-based; 0 if empty.
  int first_in(Word mask) const noexcept;

  std::string str() const;

 private:
  std::vector<int> order_;
};

/// Path v = v_1, ..., v_k = w, endpoints inclusive. Requires leq(w, v).
std::vector<Vertex> lambda_path(const Vertex& v, const Vertex& w, const CoordinateOrdering& ord);

/// Throws PreconditionError when c is not intersection closed.
ConceptClass shortest_path_closure(const ConceptClass& c, const CoordinateOrdering& ord);

struct EmbeddingReport {
  int d = -1;       // VC dimension of the input
  int d_star = -1;  // VC dimension of the embedding
  std::uint64_t size = 0;
  std::uint64_t size_star = 0;
  int n = 0;
  bool intersection_closed = false;
  bool shortest_path_closed = false;
  bool extremal = false;
  bool vc_within_bound = false;    // d* <= 11 d
  bool size_within_bound = false;  // |C*| <= n |C|^2
  /// Human-readable witnesses for every failed check.
  std::vector<std::string> violations;

  /// d*/d, with 0/0 read as 1.
  double ratio() const;
  bool ok() const noexcept { return violations.empty(); }
};

/// Evaluates every guarantee on (C, C*). Throws PreconditionError unless
/// C is contained in C*. Failed guarantees land in `violations`.
EmbeddingReport verify_embedding(const ConceptClass& c, const ConceptClass& c_star);

/// 11d * S(11d, d)^2 / 2 with S the Sauer bound: the cap on the size of any
/// projection of C* to 11d coordinates.
std::uint64_t projection_size_bound(int d);

/// 2^(11d), the size of the 11d-cube; exact up to d = 5.
std::uint64_t projection_cube_size(int d);

}  // namespace cubescheme
