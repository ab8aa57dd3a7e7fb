#include "cubescheme/cube_core.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "word_set.hpp"

namespace cubescheme {

namespace {

void require_dim(int n) {
  if (n < 0 || n > kMaxDimension)
    throw PreconditionError("dimension " + std::to_string(n) + " outside [0, 63]");
}

void require_same_dim(int a, int b) {
  if (a != b) throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::string render(int n, Word bits) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((bits >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace

// ---------------------------------------------------------------- CoordSet

CoordSet CoordSet::from_coords(std::span<const int> coords) {
  Word mask = 0;
  for (int c : coords) {
    if (c < 1 || c > kMaxDimension) throw PreconditionError("coordinate " + std::to_string(c) + " outside [1, 63]");
    mask |= Word{1} << (c - 1);
  }
  return CoordSet(mask);
}

std::vector<int> CoordSet::coords() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Word m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string CoordSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int c : coords()) {
    if (!first) s += ',';
    s += std::to_string(c);
    first = false;
  }
  return s + "}";
}

std::strong_ordering operator<=>(CoordSet a, CoordSet b) noexcept {
  if (auto cmp = a.size() <=> b.size(); cmp != 0) return cmp;
  const Word diff = a.mask_ ^ b.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  // The smallest differing coordinate decides the lexicographic comparison.
  return (a.mask_ & diff & (~diff + 1)) ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ------------------------------------------------------------------ Vertex

Vertex::Vertex(int n, Word bits) : n_(n), bits_(bits) {
  require_dim(n);
  if ((bits & ~low_mask(n)) != 0) throw PreconditionError("vertex bits set above dimension " + std::to_string(n));
}

Vertex Vertex::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxDimension))
    throw PreconditionError("bitstring longer than 63 characters");
  Word bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      bits |= Word{1} << i;
    else if (text[i] != '0')
      throw PreconditionError("invalid character '" + std::string(1, text[i]) + "' in bitstring");
  }
  return Vertex(static_cast<int>(text.size()), bits);
}

std::string Vertex::str() const { return render(n_, bits_); }

int hamming(const Vertex& u, const Vertex& v) {
  require_same_dim(u.dim(), v.dim());
  return std::popcount(u.bits() ^ v.bits());
}

Vertex intersect(const Vertex& u, const Vertex& v) {
  require_same_dim(u.dim(), v.dim());
  return Vertex(u.dim(), u.bits() & v.bits());
}

bool leq(const Vertex& u, const Vertex& v) {
  require_same_dim(u.dim(), v.dim());
  return (u.bits() & ~v.bits()) == 0;
}

// ------------------------------------------------------------ ConceptClass

ConceptClass::ConceptClass(int n) : n_(n) { require_dim(n); }

ConceptClass::ConceptClass(int n, std::vector<Word> words) : n_(n), words_(std::move(words)) {
  require_dim(n);
  const Word outside = ~low_mask(n);
  for (Word w : words_)
    if (w & outside) throw PreconditionError("vertex bits set above dimension " + std::to_string(n));
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

ConceptClass::ConceptClass(int n, std::span<const Vertex> vertices) : n_(n) {
  require_dim(n);
  words_.reserve(vertices.size());
  for (const auto& v : vertices) {
    require_same_dim(n, v.dim());
    words_.push_back(v.bits());
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

ConceptClass ConceptClass::full_cube(int n) {
  require_dim(n);
  if (n > detail::WordSet::kDenseLimit) throw GuardError("full cube above dimension 24 is not materialised");
  std::vector<Word> words(std::size_t{1} << n);
  for (std::size_t i = 0; i < words.size(); ++i) words[i] = i;
  return ConceptClass(n, std::move(words));
}

ConceptClass ConceptClass::from_strings(int n, std::initializer_list<std::string_view> rows) {
  std::vector<Vertex> vs;
  for (auto row : rows) vs.push_back(Vertex::parse(row));
  for (const auto& v : vs) require_same_dim(n, v.dim());
  return ConceptClass(n, std::span<const Vertex>(vs));
}

std::vector<Vertex> ConceptClass::vertices() const {
  std::vector<Vertex> out;
  out.reserve(words_.size());
  for (Word w : words_) out.emplace_back(n_, w);
  return out;
}

bool ConceptClass::contains(Word w) const noexcept { return std::binary_search(words_.begin(), words_.end(), w); }

bool ConceptClass::contains(const Vertex& v) const {
  require_same_dim(n_, v.dim());
  return contains(v.bits());
}

std::size_t ConceptClass::index_of(Word w) const noexcept {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) return words_.size();
  return static_cast<std::size_t>(it - words_.begin());
}

ConceptClass ConceptClass::with(Word w) const {
  auto words = words_;
  words.push_back(w);
  return ConceptClass(n_, std::move(words));
}

ConceptClass ConceptClass::without(Word w) const {
  auto words = words_;
  std::erase(words, w);
  return ConceptClass(n_, std::move(words));
}

bool ConceptClass::subset_of(const ConceptClass& other) const {
  require_same_dim(n_, other.n_);
  return std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end());
}

ConceptClass set_union(const ConceptClass& a, const ConceptClass& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<Word> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ConceptClass(a.dim(), std::move(out));
}

ConceptClass set_difference(const ConceptClass& a, const ConceptClass& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<Word> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ConceptClass(a.dim(), std::move(out));
}

// -------------------------------------------------------------------- Cube

Cube::Cube(int n, CoordSet colours, Word anchor) : n_(n), colours_(colours), anchor_(anchor) {
  require_dim(n);
  if (!colours.within(n)) throw PreconditionError("cube colours outside [n]");
  if ((anchor & ~low_mask(n)) != 0 || (anchor & colours.mask()) != 0)
    throw PreconditionError("cube anchor must be zero on colours and above n");
}

std::vector<Word> Cube::words() const {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << dim());
  const Word free = colours_.mask();
  // Enumerate submasks of the colour set in increasing order.
  Word sub = 0;
  do {
    out.push_back(anchor_ | sub);
    sub = (sub - free) & free;
  } while (sub != 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool Cube::subset_of(const ConceptClass& c) const {
  if (c.dim() != n_) return false;
  for (Word w : words())
    if (!c.contains(w)) return false;
  return true;
}

bool Cube::disjoint_from(const ConceptClass& c) const {
  for (Word w : c)
    if (contains(w)) return false;
  return true;
}

std::string Cube::str() const {
  std::string s = render(n_, anchor_);
  for (int i = 0; i < n_; ++i)
    if ((colours_.mask() >> i) & 1U) s[static_cast<std::size_t>(i)] = '*';
  return s;
}

std::strong_ordering operator<=>(const Cube& a, const Cube& b) noexcept {
  if (auto cmp = a.n_ <=> b.n_; cmp != 0) return cmp;
  if (auto cmp = a.colours_ <=> b.colours_; cmp != 0) return cmp;
  return a.anchor_ <=> b.anchor_;
}

// -------------------------------------------------------------- operations

ConceptClass project(const ConceptClass& c, CoordSet coords) {
  if (!coords.within(c.dim())) throw PreconditionError("projection coordinates " + coords.str() + " outside [n]");
  std::vector<Word> out;
  out.reserve(c.size());
  for (Word w : c) out.push_back(project_word(w, coords));
  return ConceptClass(coords.size(), std::move(out));
}

ConceptClass complement(const ConceptClass& c) {
  if (c.dim() > detail::WordSet::kDenseLimit) throw GuardError("complement above dimension 24 is not materialised");
  std::vector<Word> out;
  const Word total = Word{1} << c.dim();
  out.reserve(total - c.size());
  auto it = c.begin();
  for (Word w = 0; w < total; ++w) {
    if (it != c.end() && *it == w) {
      ++it;
      continue;
    }
    out.push_back(w);
  }
  return ConceptClass(c.dim(), std::move(out));
}

std::vector<Word> neighbour_masks(const ConceptClass& c) {
  const detail::WordSet members(c.dim(), c.words());
  std::vector<Word> out(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Word w = c.words()[i];
    for (int b = 0; b < c.dim(); ++b)
      if (members.contains(w ^ (Word{1} << b))) out[i] |= Word{1} << b;
  }
  return out;
}

std::vector<Edge> one_inclusion_edges(const ConceptClass& c) {
  std::vector<Edge> edges;
  const auto nbrs = neighbour_masks(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Word w = c.words()[i];
    for (Word up = nbrs[i] & ~w; up != 0; up &= up - 1) {
      const int b = std::countr_zero(up);
      edges.push_back(Edge{Vertex(c.dim(), w), Vertex(c.dim(), w | (Word{1} << b)), b + 1});
    }
  }
  return edges;
}

namespace {

using CubeKey = std::pair<Word, Word>;  // (colours, anchor)
using CubeKeySet = std::unordered_set<CubeKey, detail::PairHash>;

// Level-by-level merge: a (k+1)-cube with colours I and anchor a is the union
// of the k-cubes (I - max I, a) and (I - max I, a | bit max I). Each cube is
// produced once, from its largest colour. Calls visit(level, keys, key_set)
// for each non-empty level.
template <class Visit>
void walk_cube_levels(const ConceptClass& c, Visit&& visit) {
  const int n = c.dim();
  std::vector<CubeKey> level;
  level.reserve(c.size());
  for (Word w : c) level.emplace_back(0, w);
  CubeKeySet keys(level.begin(), level.end());
  for (int k = 0; !level.empty(); ++k) {
    visit(k, level, keys);
    std::vector<CubeKey> next;
    for (const auto& [colours, anchor] : level) {
      const int start = colours == 0 ? 0 : 64 - std::countl_zero(colours);
      for (int b = start; b < n; ++b) {
        const Word bit = Word{1} << b;
        if (anchor & bit) continue;
        if (keys.count({colours, anchor | bit})) next.emplace_back(colours | bit, anchor);
      }
    }
    level = std::move(next);
    keys = CubeKeySet(level.begin(), level.end());
  }
}

}  // namespace

std::vector<Cube> enumerate_cubes(const ConceptClass& c, bool maximal_only) {
  const int n = c.dim();
  std::vector<Cube> out;
  walk_cube_levels(c, [&](int, const std::vector<CubeKey>& level, const CubeKeySet& keys) {
    for (const auto& [colours, anchor] : level) {
      if (maximal_only) {
        // Maximal iff no parallel copy across any further colour exists.
        bool maximal = true;
        for (Word free = low_mask(n) & ~colours; free != 0 && maximal; free &= free - 1) {
          const Word bit = free & (~free + 1);
          if (keys.count({colours, anchor ^ bit})) maximal = false;
        }
        if (!maximal) continue;
      }
      out.emplace_back(n, CoordSet(colours), anchor);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CoordSet> cube_types(const ConceptClass& c) {
  std::vector<CoordSet> out;
  walk_cube_levels(c, [&](int, const std::vector<CubeKey>& level, const CubeKeySet&) {
    std::unordered_set<Word> seen;
    for (const auto& key : level)
      if (seen.insert(key.first).second) out.emplace_back(key.first);
  });
  std::sort(out.begin(), out.end());
  return out;
}

PathClosureResult check_shortest_path_closed(const ConceptClass& c) {
  // A shortest path from u to v inside c exists for every ordered pair iff
  // every u has a neighbour in c one step closer to every v.
  const auto nbrs = neighbour_masks(c);
  const auto words = c.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j) continue;
      if ((nbrs[i] & (words[i] ^ words[j])) == 0)
        return {false, std::make_pair(Vertex(c.dim(), words[i]), Vertex(c.dim(), words[j]))};
    }
  }
  return {};
}

ReductionTail reduction_tail(const ConceptClass& c, CoordSet coords) {
  if (!coords.within(c.dim())) throw PreconditionError("coordinates " + coords.str() + " outside [n]");
  std::unordered_map<Word, int> fibre;
  for (Word w : c) ++fibre[project_word(w, coords)];
  std::vector<Word> reduction, tail;
  for (const auto& [p, count] : fibre) (count > 1 ? reduction : tail).push_back(p);
  return {ConceptClass(coords.size(), std::move(reduction)), ConceptClass(coords.size(), std::move(tail))};
}

}  // namespace cubescheme
