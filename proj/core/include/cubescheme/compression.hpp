#pragma once

// Unlabelled sample compression schemes (representation maps).
//
// A representation map r sends each concept to a small coordinate set such
// that r is injective and any two distinct concepts v, v' differ somewhere on
// r(v) | r(v') (non-clashing). Schemes are built either by corner peeling or
// by descending a chain of extremal subclasses (C, D) that satisfy the
// cubical colour condition: every colour set of a non-maximal cube of C is
// also the colour set of some cube of D. Each step of the chain assigns to
// the special vertex of every maximal cube of C outside D that cube's
// colours.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubescheme/cube_core.hpp"

namespace cubescheme {

class RepresentationMap {
 public:
  RepresentationMap() = default;
  explicit RepresentationMap(int n) : n_(n) {}

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<Word, CoordSet>& entries() const noexcept { return entries_; }

  /// Largest image cardinality (0 when empty).
  int size_bound() const noexcept;

  void assign(Word vertex, CoordSet rep) { entries_[vertex] = rep; }
  std::optional<CoordSet> lookup(Word vertex) const;
  /// Concept whose image is `rep`, if any (first in word order).
  std::optional<Word> invert(CoordSet rep) const;

  friend bool operator==(const RepresentationMap&, const RepresentationMap&) = default;

 private:
  int n_ = 0;
  std::map<Word, CoordSet> entries_;
};

struct SchemeCheck {
  bool valid = true;
  std::string failure;  // empty when valid
};

/// Injective, images of size <= k, non-clashing on every pair, no entries
/// outside c. Two concepts both mapped to the empty set always clash.
/// Throws PreconditionError when r misses a concept of c.
SchemeCheck verify_scheme(const ConceptClass& c, const RepresentationMap& r, int k);

/// Corner peeling: repeatedly remove the smallest vertex lying in a unique
/// maximal cube, mapping it to that cube's colours. nullopt when stuck.
std::optional<RepresentationMap> corner_peel(const ConceptClass& c);

/// For each colour set of a non-maximal cube of C, a cube of D with those colours.
struct CccCertificate {
  std::vector<std::pair<CoordSet, Cube>> witnesses;  // ascending colour sets
};

/// Throws PreconditionError unless D is a proper subset of C and both are
/// extremal.
std::optional<CccCertificate> ccc_check(const ConceptClass& c, const ConceptClass& d);

struct SandwichTriple {
  Cube cube;        // maximal cube of C not contained in D
  Cube complement;  // its complementary maximal cube in the complement of D
  Word special = 0;
};

struct SandwichBijection {
  std::vector<SandwichTriple> triples;  // in maximal-cube order
};

/// Throws PreconditionError when some projection of D onto a cube's colours
/// is onto or misses more than one point.
SandwichBijection sandwich_bijection(const ConceptClass& c, const ConceptClass& d);

/// Maximal cubes of the complement of D that meet C.
std::vector<Cube> complement_cubes_meeting(const ConceptClass& c, const ConceptClass& d);

/// rD extended by special vertex -> colours of its cube. Throws
/// PreconditionError when rD is not a valid scheme for D and
/// VerificationError if the extension fails verification.
RepresentationMap extend_scheme(const ConceptClass& c, const ConceptClass& d, const RepresentationMap& rd);

enum class CccStrategy { splitting, maximum_reduction, corner, exhaustive };
std::string to_string(CccStrategy s);

struct CccSubclass {
  ConceptClass subclass;
  CccStrategy strategy = CccStrategy::splitting;
};

/// The exhaustive fallback only runs for n <= 6 and |C| <= this.
inline constexpr std::size_t kExhaustiveClassLimit = 20;

/// Proper extremal ccc subclass of an extremal C (|C| >= 2), trying in order:
/// splitting off a smallest component of C minus the carrier of one colour,
/// a maximum subclass of VC d-1 built from reductions (maximum C only),
/// removing the smallest corner whose removal keeps C extremal, and
/// exhaustive search (small instances).
std::optional<CccSubclass> find_ccc_subclass(const ConceptClass& c);

/// Raised when no ccc subclass is found for some class of the chain.
class NoCccChain : public std::runtime_error {
 public:
  explicit NoCccChain(ConceptClass stuck)
      : std::runtime_error("no ccc chain found (stuck at a class of size " + std::to_string(stuck.size()) + ")"),
        stuck_(std::move(stuck)) {}
  const ConceptClass& stuck() const noexcept { return stuck_; }

 private:
  ConceptClass stuck_;
};

struct SchemeBuild {
  RepresentationMap map;
  int k = 0;                       // achieved size
  std::vector<std::size_t> chain;  // class sizes from C down to the base
  std::vector<CccStrategy> strategies;
};

/// ccc chain down to VC <= 1, corner peeling at the base, extension back up.
/// Throws PreconditionError if C is not extremal, NoCccChain if stuck.
SchemeBuild build_scheme_detailed(const ConceptClass& c);
RepresentationMap build_scheme(const ConceptClass& c);

/// Per-(class, domain) scheme cache; concurrent readers, exclusive writers.
class SchemeCache {
 public:
  std::shared_ptr<const RepresentationMap> get(const ConceptClass& c, CoordSet domain);
  std::size_t size() const;

 private:
  struct Key {
    int n;
    std::vector<Word> words;
    Word domain;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, std::shared_ptr<const RepresentationMap>, KeyHash> entries_;
};

/// Representation of a labelling of `domain` under the scheme built on the
/// projection of c to `domain`, as coordinates of [n]. Throws
/// PreconditionError when the labelling is not realised by c.
CoordSet compress_sample(const ConceptClass& c, CoordSet domain, const Vertex& labels, SchemeCache* cache = nullptr);

/// Inverse of compress_sample: the labelling of `domain` represented by
/// `rep`. Throws PreconditionError when rep is not in the scheme's image.
Vertex reconstruct(const ConceptClass& c, CoordSet domain, CoordSet rep, SchemeCache* cache = nullptr);

struct RoundTripSummary {
  std::size_t domains = 0;
  std::size_t labellings = 0;
  std::size_t failures = 0;
  int max_rep_size = 0;
  std::string first_failure;  // empty when every labelling round-trips
};

/// compress_sample then reconstruct for every realised labelling of every
/// listed domain, in parallel over domains. The summary does not depend on
/// the worker count.
RoundTripSummary roundtrip_check(const ConceptClass& c, const std::vector<CoordSet>& domains, SchemeCache& cache,
                                 unsigned threads = 0);

/// All subsets of [n] ordered by mask value.
std::vector<CoordSet> all_domains(int n);

}  // namespace cubescheme
