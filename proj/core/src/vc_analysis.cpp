#include "cubescheme/vc_analysis.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "word_set.hpp"

namespace cubescheme {

bool shatters(const ConceptClass& c, CoordSet coords) {
  if (!coords.within(c.dim())) throw PreconditionError("coordinates " + coords.str() + " outside [n]");
  const int k = coords.size();
  if (c.empty()) return false;
  if (k >= 63 || c.size() < (std::size_t{1} << k)) return false;
  detail::WordSet seen(k);
  for (Word w : c) {
    seen.insert(project_word(w, coords));
    if (seen.size() == (std::size_t{1} << k)) return true;
  }
  return false;
}

std::vector<CoordSet> shattered_sets(const ConceptClass& c) {
  std::vector<CoordSet> out;
  if (c.empty()) return out;
  const int n = c.dim();
  std::vector<Word> level{0};
  out.emplace_back(0);
  while (!level.empty()) {
    const std::unordered_set<Word> current(level.begin(), level.end());
    std::vector<Word> next;
    // Extending each set by a larger coordinate visits candidates in
    // lexicographic order when the current level is.
    for (Word s : level) {
      const int start = s == 0 ? 0 : 64 - std::countl_zero(s);
      for (int b = start; b < n; ++b) {
        const Word cand = s | (Word{1} << b);
        bool all_faces = true;
        for (Word m = s; m != 0 && all_faces; m &= m - 1)
          all_faces = current.count(cand & ~(m & (~m + 1))) != 0;
        if (all_faces && shatters(c, CoordSet(cand))) next.push_back(cand);
      }
    }
    for (Word s : next) out.emplace_back(s);
    level = std::move(next);
  }
  return out;
}

int vc_dimension(const ConceptClass& c) {
  if (c.empty()) return -1;
  const auto sets = shattered_sets(c);
  return sets.back().size();
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  detail::U128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t sauer_bound(int n, int d) {
  if (n < 0 || d < 0 || d > n)
    throw PreconditionError("sauer_bound needs 0 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  std::uint64_t total = 0;
  for (int i = 0; i <= d; ++i) {
    const auto term = binomial(n, i);
    if (total > std::numeric_limits<std::uint64_t>::max() - term) throw std::overflow_error("sauer_bound overflows 64 bits");
    total += term;
  }
  return total;
}

bool has_cube_with_colours(const ConceptClass& c, CoordSet coords) {
  // A full fibre over some anchor: 2^|I| members agreeing off I.
  const int k = coords.size();
  if (k >= 63 || c.size() < (std::size_t{1} << k)) return false;
  std::unordered_map<Word, std::size_t> fibre;
  const Word keep = ~coords.mask();
  for (Word w : c)
    if (++fibre[w & keep] == (std::size_t{1} << k)) return true;
  return false;
}

ClassReport classify(const ConceptClass& c) {
  ClassReport r;
  r.n = c.dim();
  r.cardinality = c.size();
  if (c.empty()) return r;

  const auto shattered = shattered_sets(c);
  r.vc_dimension = shattered.back().size();
  r.shattered_count = shattered.size();
  r.cube_type_count = cube_types(c).size();
  r.sauer_bound_value = sauer_bound(r.n, r.vc_dimension);
  r.is_maximum = r.cardinality == r.sauer_bound_value;

  // Direct route: every shattered set is witnessed by a subcube.
  r.is_extremal = std::all_of(shattered.begin(), shattered.end(),
                              [&](CoordSet s) { return has_cube_with_colours(c, s); });

  // Counting route: cube types are always shattered, so the two agree iff
  // the counts match, and then the Sandwich equalities hold.
  const bool by_counting = r.shattered_count == r.cube_type_count;
  if (by_counting != r.is_extremal) throw VerificationError("extremality routes disagree");
  assert(!r.is_extremal || r.cardinality == r.shattered_count);
  if (r.is_extremal && r.cardinality != r.shattered_count)
    throw VerificationError("extremal class violates the Sandwich equalities");
  return r;
}

bool is_complete_collection(const std::vector<Cube>& cubes, int n, int d) {
  for (const auto& cube : cubes)
    if (cube.dim() != d || cube.ambient_dim() != n) throw PreconditionError("complete collection needs uniform d-cubes in [n]");
  if (cubes.size() != binomial(n, d)) return false;
  std::set<Word> colours;
  for (const auto& cube : cubes)
    if (!colours.insert(cube.colours().mask()).second) return false;
  return true;
}

}  // namespace cubescheme
