#pragma once

// Vertices, concept classes and subcubes of the binary n-cube.
//
// Coordinates are 1-based at every public boundary (text, JSON, CoordSet
// conversion) and 0-based inside: bit i of a word stores coordinate i+1.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubescheme/errors.hpp"

namespace cubescheme {

using Word = std::uint64_t;

inline constexpr int kMaxDimension = 63;

/// Mask with the low `n` bits set.
constexpr Word low_mask(int n) noexcept { return n >= 64 ? ~Word{0} : (Word{1} << n) - 1; }

/// Packs the bits of `word` selected by `mask` into the low bits (software pext).
constexpr Word extract_bits(Word word, Word mask) noexcept {
  Word out = 0;
  int k = 0;
  for (Word m = mask; m != 0; m &= m - 1, ++k)
    if (word & (m & (~m + 1))) out |= Word{1} << k;
  return out;
}

/// Inverse of extract_bits: spreads the low bits of `word` onto `mask`.
constexpr Word deposit_bits(Word word, Word mask) noexcept {
  Word out = 0;
  int k = 0;
  for (Word m = mask; m != 0; m &= m - 1, ++k)
    if (word & (Word{1} << k)) out |= m & (~m + 1);
  return out;
}

/// A set of coordinates of [n], stored as a bit mask.
class CoordSet {
 public:
  constexpr CoordSet() = default;
  constexpr explicit CoordSet(Word mask) : mask_(mask) {}

  /// From 1-based coordinate numbers; rejects 0 and anything above 63.
  static CoordSet from_coords(std::span<const int> coords);
  static CoordSet from_coords(std::initializer_list<int> coords) {
    return from_coords(std::span<const int>(coords.begin(), coords.size()));
  }
  /// All of [n].
  static constexpr CoordSet full(int n) { return CoordSet(low_mask(n)); }

  constexpr Word mask() const noexcept { return mask_; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  /// 1-based membership test.
  constexpr bool contains(int coord) const noexcept {
    return coord >= 1 && coord <= 64 && ((mask_ >> (coord - 1)) & 1U);
  }
  constexpr bool within(int n) const noexcept { return (mask_ & ~low_mask(n)) == 0; }
  constexpr bool subset_of(CoordSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }

  /// Ascending 1-based coordinate numbers.
  std::vector<int> coords() const;
  /// "{1,3}" style rendering.
  std::string str() const;

  friend constexpr CoordSet operator|(CoordSet a, CoordSet b) noexcept { return CoordSet(a.mask_ | b.mask_); }
  friend constexpr CoordSet operator&(CoordSet a, CoordSet b) noexcept { return CoordSet(a.mask_ & b.mask_); }
  friend constexpr bool operator==(CoordSet, CoordSet) = default;
  /// Size first, then lexicographic on the ascending coordinate lists.
  friend std::strong_ordering operator<=>(CoordSet a, CoordSet b) noexcept;

 private:
  Word mask_ = 0;
};

/// A point of {0,1}^n.
class Vertex {
 public:
  constexpr Vertex() = default;
  /// Throws PreconditionError when n is out of range or bits spill above n.
  Vertex(int n, Word bits);

  /// Parses a bitstring; leftmost character is coordinate 1.
  static Vertex parse(std::string_view text);

  constexpr int dim() const noexcept { return n_; }
  constexpr Word bits() const noexcept { return bits_; }
  /// 1-based coordinate value.
  constexpr bool at(int coord) const noexcept { return (bits_ >> (coord - 1)) & 1U; }
  constexpr int weight() const noexcept { return std::popcount(bits_); }

  std::string str() const;

  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  int n_ = 0;
  Word bits_ = 0;
};

int hamming(const Vertex& u, const Vertex& v);
/// Coordinate-wise minimum.
Vertex intersect(const Vertex& u, const Vertex& v);
/// True iff u lies between v and the origin.
bool leq(const Vertex& u, const Vertex& v);

/// A finite set of vertices of {0,1}^n, deduplicated and sorted by word value.
///
/// Immutable once built. n may be 0 (the one-point cube), which only arises
/// from projecting onto the empty coordinate set.
class ConceptClass {
 public:
  ConceptClass() = default;
  explicit ConceptClass(int n);
  ConceptClass(int n, std::vector<Word> words);
  ConceptClass(int n, std::span<const Vertex> vertices);

  static ConceptClass full_cube(int n);
  /// Parses each entry as a bitstring of length n.
  static ConceptClass from_strings(int n, std::initializer_list<std::string_view> rows);

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  std::span<const Word> words() const noexcept { return words_; }
  Vertex vertex(std::size_t index) const { return Vertex(n_, words_[index]); }
  std::vector<Vertex> vertices() const;

  bool contains(Word w) const noexcept;
  bool contains(const Vertex& v) const;
  /// Index of `w` in words(), or size() when absent.
  std::size_t index_of(Word w) const noexcept;

  /// Set algebra on classes of equal dimension.
  ConceptClass with(Word w) const;
  ConceptClass without(Word w) const;
  bool subset_of(const ConceptClass& other) const;

  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  friend bool operator==(const ConceptClass&, const ConceptClass&) = default;

 private:
  int n_ = 0;
  std::vector<Word> words_;
};

ConceptClass set_union(const ConceptClass& a, const ConceptClass& b);
ConceptClass set_difference(const ConceptClass& a, const ConceptClass& b);

/// A subcube: free coordinates (colours) plus fixed values elsewhere (anchor).
///
/// The anchor is stored as a full word whose colour bits are zero, so
/// (colours, anchor) identifies the cube uniquely.
class Cube {
 public:
  constexpr Cube() = default;
  Cube(int n, CoordSet colours, Word anchor);

  constexpr int ambient_dim() const noexcept { return n_; }
  constexpr CoordSet colours() const noexcept { return colours_; }
  constexpr Word anchor() const noexcept { return anchor_; }
  /// Coordinates carrying fixed values.
  constexpr CoordSet anchor_domain() const noexcept { return CoordSet(low_mask(n_) & ~colours_.mask()); }
  constexpr int dim() const noexcept { return colours_.size(); }
  constexpr bool contains(Word w) const noexcept { return (w & ~colours_.mask()) == anchor_; }
  /// Sorted vertices of the cube (2^dim of them).
  std::vector<Word> words() const;
  bool subset_of(const ConceptClass& c) const;
  bool disjoint_from(const ConceptClass& c) const;
  /// Bitstring with `*` on the colours, e.g. "1*0*".
  std::string str() const;

  friend constexpr bool operator==(const Cube&, const Cube&) = default;
  friend std::strong_ordering operator<=>(const Cube& a, const Cube& b) noexcept;

 private:
  int n_ = 0;
  CoordSet colours_;
  Word anchor_ = 0;
};

struct Edge {
  Vertex lower;  // endpoint with 0 at the colour
  Vertex upper;
  int colour = 0;  // 1-based

  friend bool operator==(const Edge&, const Edge&) = default;
};

ConceptClass project(const ConceptClass& c, CoordSet coords);
/// Projection of a single word onto `coords`, packed into |coords| bits.
inline Word project_word(Word w, CoordSet coords) noexcept { return extract_bits(w, coords.mask()); }

ConceptClass complement(const ConceptClass& c);

std::vector<Edge> one_inclusion_edges(const ConceptClass& c);

/// For every vertex, the mask of colours along which it has a neighbour in c.
std::vector<Word> neighbour_masks(const ConceptClass& c);

/// Every subcube contained in c (or only the maximal ones), sorted.
std::vector<Cube> enumerate_cubes(const ConceptClass& c, bool maximal_only);

/// Distinct colour sets over all subcubes of c.
std::vector<CoordSet> cube_types(const ConceptClass& c);

struct PathClosureResult {
  bool closed = true;
  /// First ordered pair (u, v) with no neighbour of u in c closer to v.
  std::optional<std::pair<Vertex, Vertex>> witness;
};

PathClosureResult check_shortest_path_closed(const ConceptClass& c);
inline bool is_shortest_path_closed(const ConceptClass& c) { return check_shortest_path_closed(c).closed; }

struct ReductionTail {
  ConceptClass reduction;  // projected points with at least two pre-images
  ConceptClass tail;       // projected points with exactly one pre-image
};

ReductionTail reduction_tail(const ConceptClass& c, CoordSet coords);

}  // namespace cubescheme
