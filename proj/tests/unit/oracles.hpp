#pragma once

// Deliberately naive reference implementations used as test oracles. They
// share no code with the library beyond the value types.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "cubescheme/cube_core.hpp"
#include "cubescheme/compression.hpp"

namespace oracle {

using cubescheme::ConceptClass;
using cubescheme::Word;

inline std::set<Word> as_set(const ConceptClass& c) { return {c.begin(), c.end()}; }

inline Word project_bits(Word w, Word mask) {
  Word out = 0;
  int j = 0;
  for (int i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) {
      if ((w >> i) & 1U) out |= Word{1} << j;
      ++j;
    }
  }
  return out;
}

inline bool shatters(const ConceptClass& c, Word mask) {
  std::set<Word> seen;
  for (Word w : c) seen.insert(w & mask);
  return seen.size() == (std::size_t{1} << std::popcount(mask));
}

inline int vc_dimension(const ConceptClass& c) {
  if (c.empty()) return -1;
  int best = 0;
  for (Word m = 0; m < (Word{1} << c.dim()); ++m)
    if (std::popcount(m) > best && shatters(c, m)) best = std::popcount(m);
  return best;
}

inline std::size_t shattered_count(const ConceptClass& c) {
  std::size_t count = 0;
  for (Word m = 0; m < (Word{1} << c.dim()); ++m) count += shatters(c, m);
  return count;
}

// Colour set -> anchors of every subcube of c with exactly those colours.
inline std::map<Word, std::vector<Word>> all_cubes(const ConceptClass& c) {
  const auto members = as_set(c);
  std::map<Word, std::vector<Word>> out;
  const Word full = (Word{1} << c.dim()) - 1;
  for (Word colours = 0; colours <= full; ++colours) {
    for (Word anchor = 0; anchor <= full; ++anchor) {
      if (anchor & colours) continue;
      bool inside = true;
      for (Word sub = colours;; sub = (sub - 1) & colours) {
        if (!members.count(anchor | sub)) {
          inside = false;
          break;
        }
        if (sub == 0) break;
      }
      if (inside) out[colours].push_back(anchor);
    }
  }
  return out;
}

inline bool is_extremal(const ConceptClass& c) {
  std::size_t sh = 0;
  const auto cubes = all_cubes(c);
  for (Word m = 0; m < (Word{1} << c.dim()); ++m) {
    const bool s = shatters(c, m);
    const bool has_cube = cubes.count(m) > 0;
    if (s != has_cube) return false;
    sh += s;
  }
  return sh == c.size();
}

inline bool is_intersection_closed(const ConceptClass& c) {
  for (Word a : c)
    for (Word b : c)
      if (!c.contains(a & b)) return false;
  return true;
}

inline std::set<Word> intersection_closure(const ConceptClass& c) {
  std::set<Word> cur = as_set(c);
  while (true) {
    std::set<Word> next = cur;
    for (Word a : cur)
      for (Word b : cur) next.insert(a & b);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

// Breadth-first distances inside c from `start`.
inline std::map<Word, int> bfs(const ConceptClass& c, Word start) {
  std::map<Word, int> dist{{start, 0}};
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    const Word u = queue.front();
    queue.pop_front();
    for (int b = 0; b < c.dim(); ++b) {
      const Word v = u ^ (Word{1} << b);
      if (c.contains(v) && !dist.count(v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

inline bool is_shortest_path_closed(const ConceptClass& c) {
  for (Word u : c) {
    const auto dist = bfs(c, u);
    for (Word v : c) {
      auto it = dist.find(v);
      if (it == dist.end() || it->second != std::popcount(u ^ v)) return false;
    }
  }
  return true;
}

// Minimum over origins of the closure VC dimension.
inline int min_closure_vc(const ConceptClass& c) {
  int best = c.dim() + 1;
  for (Word o = 0; o < (Word{1} << c.dim()); ++o) {
    std::vector<Word> moved;
    for (Word w : c) moved.push_back(w ^ o);
    const auto closed = oracle::intersection_closure(ConceptClass(c.dim(), moved));
    best = std::min(best, oracle::vc_dimension(ConceptClass(c.dim(), std::vector<Word>(closed.begin(), closed.end()))));
  }
  return best;
}

// k-close cube condition by direct search: some centre v such that every
// colour set of size n-k-1 has a cube in the complement anchored within
// distance one of v.
inline bool k_close(const ConceptClass& c, int k) {
  const int n = c.dim();
  const int dim = n - k - 1;
  if (dim < 0) return true;
  const Word full = (Word{1} << n) - 1;
  const auto members = as_set(c);
  auto cube_outside = [&](Word colours, Word anchor) {
    for (Word sub = colours;; sub = (sub - 1) & colours) {
      if (members.count(anchor | sub)) return false;
      if (sub == 0) return true;
    }
  };
  for (Word v = 0; v <= full; ++v) {
    bool all = true;
    for (Word colours = 0; colours <= full && all; ++colours) {
      if (std::popcount(colours) != dim) continue;
      const Word base = v & ~colours;
      bool found = cube_outside(colours, base);
      for (int b = 0; b < n && !found; ++b)
        if (!((colours >> b) & 1U)) found = cube_outside(colours, base ^ (Word{1} << b));
      all = found;
    }
    if (all) return true;
  }
  return false;
}

// Injective and non-clashing over every ordered pair; sizes at most k.
inline bool scheme_valid(const ConceptClass& c, const cubescheme::RepresentationMap& r, int k) {
  if (r.size() != c.size()) return false;
  for (Word u : c) {
    const auto ru = r.lookup(u);
    if (!ru || ru->size() > k) return false;
    for (Word v : c) {
      if (u == v) continue;
      const Word on = ru->mask() | r.lookup(v)->mask();
      if (((u ^ v) & on) == 0) return false;
    }
  }
  return true;
}

inline ConceptClass random_class(std::mt19937_64& rng, int n, double p) {
  std::vector<Word> words;
  std::bernoulli_distribution keep(p);
  for (Word w = 0; w < (Word{1} << n); ++w)
    if (keep(rng)) words.push_back(w);
  if (words.empty()) words.push_back(rng() & ((Word{1} << n) - 1));
  return ConceptClass(n, std::move(words));
}

}  // namespace oracle
