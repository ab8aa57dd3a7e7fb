#include "cubescheme/classgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cubescheme/closure.hpp"
#include "cubescheme/vc_analysis.hpp"
#include "word_set.hpp"

namespace cubescheme {

namespace {

using Rng = std::mt19937_64;

// Modulo draw; platform independent given the engine's fixed output.
std::uint64_t below(Rng& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

Word random_word(Rng& rng, int n) { return rng() & low_mask(n); }

constexpr std::pair<Family, const char*> kFamilyNames[] = {
    {Family::full_cube, "full_cube"},
    {Family::hamming_ball, "hamming_ball"},
    {Family::downward_closed, "downward_closed"},
    {Family::random_intersection_closed, "random_intersection_closed"},
    {Family::monomial_union, "monomial_union"},
    {Family::hyperrectangle, "hyperrectangle"},
    {Family::tree, "tree"},
    {Family::random_extremal_vc2, "random_extremal_vc2"},
    {Family::random_maximum, "random_maximum"},
};

std::size_t sample_count(int n, double density) {
  const double raw = std::ceil(density * std::ldexp(1.0, n));
  return static_cast<std::size_t>(std::max(1.0, raw));
}

ConceptClass hamming_ball(int n, int d) {
  std::vector<Word> words;
  const Word total = Word{1} << n;
  for (Word w = 0; w < total; ++w)
    if (std::popcount(w) <= d) words.push_back(w);
  return ConceptClass(n, std::move(words));
}

ConceptClass down_closure(int n, const std::vector<Word>& generators) {
  detail::WordSet seen(n);
  std::vector<Word> out;
  for (Word g : generators) {
    Word sub = g;
    while (true) {
      if (seen.insert(sub)) out.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & g;
    }
  }
  return ConceptClass(n, std::move(out));
}

Word random_word_of_weight(Rng& rng, int n, int weight) {
  std::vector<int> coords(static_cast<std::size_t>(n));
  std::iota(coords.begin(), coords.end(), 0);
  Word w = 0;
  for (int i = 0; i < weight; ++i) {
    const auto j = i + static_cast<int>(below(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(coords[static_cast<std::size_t>(i)], coords[static_cast<std::size_t>(j)]);
    w |= Word{1} << coords[static_cast<std::size_t>(i)];
  }
  return w;
}

ConceptClass downward_closed(const GenSpec& s, Rng& rng) {
  const auto m = std::min<std::size_t>(sample_count(s.n, s.density), 4 * static_cast<std::size_t>(s.n));
  std::vector<Word> generators{random_word_of_weight(rng, s.n, s.d)};
  for (std::size_t i = 1; i < m; ++i)
    generators.push_back(random_word_of_weight(rng, s.n, static_cast<int>(below(rng, static_cast<std::uint64_t>(s.d) + 1))));
  return down_closure(s.n, generators);
}

ConceptClass random_intersection_closed(const GenSpec& s, Rng& rng) {
  // Grow a generator set, keeping a point only while the closure stays
  // within the VC cap.
  const auto attempts = std::max<std::size_t>(sample_count(s.n, s.density), 2);
  std::vector<Word> generators{random_word(rng, s.n)};
  ConceptClass cls = intersection_closure(ConceptClass(s.n, generators));
  for (std::size_t i = 0; i < attempts; ++i) {
    generators.push_back(random_word(rng, s.n));
    auto next = intersection_closure(ConceptClass(s.n, generators));
    if (vc_dimension(next) <= s.d)
      cls = std::move(next);
    else
      generators.pop_back();
  }
  return cls;
}

ConceptClass monomial_union(const GenSpec& s, Rng& rng) {
  std::vector<int> coords(static_cast<std::size_t>(s.n));
  std::iota(coords.begin(), coords.end(), 0);
  for (int i = s.n - 1; i > 0; --i)
    std::swap(coords[static_cast<std::size_t>(i)], coords[below(rng, static_cast<std::uint64_t>(i) + 1)]);
  std::vector<Word> parts;
  std::size_t pos = 0;
  while (pos < coords.size()) {
    const auto len = 1 + below(rng, static_cast<std::uint64_t>(s.d));
    Word part = 0;
    for (std::size_t i = 0; i < len && pos < coords.size(); ++i, ++pos) part |= Word{1} << coords[pos];
    parts.push_back(part);
    if (below(rng, 3) == 0) break;  // leave some coordinates unused
  }
  return down_closure(s.n, parts);
}

ConceptClass hyperrectangle(const GenSpec& s) {
  const std::size_t m = s.points.front().size();
  // Candidate intervals per axis over the coordinate values present.
  std::vector<std::vector<std::pair<int, int>>> intervals(m);
  for (std::size_t axis = 0; axis < m; ++axis) {
    std::set<int> values;
    for (const auto& p : s.points) values.insert(p[axis]);
    for (auto lo = values.begin(); lo != values.end(); ++lo)
      for (auto hi = lo; hi != values.end(); ++hi) intervals[axis].emplace_back(*lo, *hi);
  }
  std::vector<Word> words{0};  // the box containing no point
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    Word w = 0;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      bool inside = true;
      for (std::size_t axis = 0; axis < m && inside; ++axis) {
        const auto [lo, hi] = intervals[axis][pick[axis]];
        inside = s.points[i][axis] >= lo && s.points[i][axis] <= hi;
      }
      if (inside) w |= Word{1} << i;
    }
    words.push_back(w);
    std::size_t axis = 0;
    while (axis < m && ++pick[axis] == intervals[axis].size()) pick[axis++] = 0;
    if (axis == m) break;
  }
  return ConceptClass(s.n, std::move(words));
}

ConceptClass random_tree(int n, Rng& rng) {
  std::vector<Word> words{random_word(rng, n)};
  std::vector<int> colours(static_cast<std::size_t>(n));
  std::iota(colours.begin(), colours.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(colours[static_cast<std::size_t>(i)], colours[below(rng, static_cast<std::uint64_t>(i) + 1)]);
  // Each colour is used by exactly one edge, hanging off a random vertex.
  for (int c : colours) {
    const Word base = words[below(rng, words.size())];
    words.push_back(base ^ (Word{1} << c));
  }
  return ConceptClass(n, std::move(words));
}

ConceptClass random_extremal_vc2(const GenSpec& s, Rng& rng) {
  ConceptClass cls = random_tree(s.n, rng);
  const auto target = sample_count(s.n, s.density);
  std::size_t added = 0;
  int vc = 1;
  for (std::size_t attempt = 0; attempt < 40 * target + 200 && (added < target || vc < 2); ++attempt) {
    const Word base = cls.words()[below(rng, cls.size())];
    const Word cand = base ^ (Word{1} << below(rng, static_cast<std::uint64_t>(s.n)));
    if (cls.contains(cand)) continue;
    auto next = cls.with(cand);
    const auto report = classify(next);
    if (!report.is_extremal || report.vc_dimension > 2) continue;
    cls = std::move(next);
    vc = report.vc_dimension;
    ++added;
  }
  return cls;
}

// A maximum VC-`d` subclass of the maximum class `p` (VC d+1), by removing
// random top-dimension corners. nullopt when the peeling gets stuck.
std::optional<ConceptClass> random_maximum_subclass(const ConceptClass& p, int top, int d, Rng& rng) {
  if (d == 0) return ConceptClass(p.dim(), std::vector<Word>{p.words()[below(rng, p.size())]});
  const auto target = sauer_bound(p.dim(), d);
  ConceptClass cur = p;
  while (cur.size() > target) {
    std::vector<int> count(cur.size(), 0);
    std::vector<int> dim(cur.size(), 0);
    for (const auto& cube : enumerate_cubes(cur, true))
      for (Word w : cube.words()) {
        const auto i = cur.index_of(w);
        ++count[i];
        dim[i] = cube.dim();
      }
    std::vector<Word> corners;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (count[i] == 1 && dim[i] == top) corners.push_back(cur.words()[i]);
    if (corners.empty()) return std::nullopt;
    cur = cur.without(corners[below(rng, corners.size())]);
  }
  return cur;
}

ConceptClass random_maximum_raw(int n, int d, Rng& rng) {
  if (d == 0) return ConceptClass(n, std::vector<Word>{random_word(rng, n)});
  if (d >= n) return ConceptClass::full_cube(n);
  // Lift: every point of P on one side of the new coordinate, and a maximum
  // VC d-1 subclass R of P on both sides.
  const ConceptClass p = random_maximum_raw(n - 1, d, rng);
  std::optional<ConceptClass> r;
  for (int attempt = 0; attempt < 8 && !r; ++attempt) r = random_maximum_subclass(p, d, d - 1, rng);
  if (!r) r = random_maximum_subclass(hamming_ball(n - 1, d), d, d - 1, rng);  // balls always peel
  const ConceptClass base = r ? p : hamming_ball(n - 1, d);
  const Word side = below(rng, 2) ? Word{1} << (n - 1) : 0;
  std::vector<Word> words;
  for (Word w : base) words.push_back(w | side);
  for (Word w : *r) words.push_back(w | (side ^ (Word{1} << (n - 1))));
  const Word flip = random_word(rng, n);
  for (Word& w : words) w ^= flip;
  return ConceptClass(n, std::move(words));
}

ConceptClass permute_coordinates(const ConceptClass& c, Rng& rng) {
  const int n = c.dim();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[static_cast<std::size_t>(i)], perm[below(rng, static_cast<std::uint64_t>(i) + 1)]);
  std::vector<Word> words;
  for (Word w : c) {
    Word out = 0;
    for (int b = 0; b < n; ++b)
      if ((w >> b) & 1U) out |= Word{1} << perm[static_cast<std::size_t>(b)];
    words.push_back(out);
  }
  return ConceptClass(n, std::move(words));
}

}  // namespace

std::string to_string(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "unknown";
}

Family family_from_string(const std::string& tag) {
  for (const auto& [fam, name] : kFamilyNames)
    if (tag == name) return fam;
  throw PreconditionError("unknown family '" + tag + "'");
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& [fam, name] : kFamilyNames) out.push_back(fam);
  return out;
}

void validate(const GenSpec& s) {
  auto fail = [&](const std::string& why) { throw PreconditionError(to_string(s.family) + ": " + why); };
  if (s.family == Family::hyperrectangle) {
    if (s.points.empty()) fail("needs at least one point");
    if (s.points.size() > static_cast<std::size_t>(kMaxDimension)) fail("at most 63 points");
    if (static_cast<std::size_t>(s.n) != s.points.size()) fail("n must equal the number of points");
    const auto m = s.points.front().size();
    if (m == 0) fail("points need at least one axis");
    for (const auto& p : s.points)
      if (p.size() != m) fail("points must share their dimension");
    return;
  }
  if (s.n < 1 || s.n > detail::WordSet::kDenseLimit) fail("n must lie in [1, 24]");
  if (s.density <= 0.0 || s.density > 1.0) fail("density must lie in (0, 1]");
  switch (s.family) {
    case Family::hamming_ball:
    case Family::downward_closed:
    case Family::random_maximum:
      if (s.d < 0 || s.d > s.n) fail("d must lie in [0, n]");
      break;
    case Family::random_intersection_closed:
    case Family::monomial_union:
      if (s.d < 1 || s.d > s.n) fail("d must lie in [1, n]");
      break;
    case Family::random_extremal_vc2:
      if (s.n < 2) fail("needs n >= 2");
      break;
    default:
      break;
  }
}

ConceptClass generate(const GenSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::full_cube: return ConceptClass::full_cube(spec.n);
    case Family::hamming_ball: return hamming_ball(spec.n, spec.d);
    case Family::downward_closed: return downward_closed(spec, rng);
    case Family::random_intersection_closed: return random_intersection_closed(spec, rng);
    case Family::monomial_union: return monomial_union(spec, rng);
    case Family::hyperrectangle: return hyperrectangle(spec);
    case Family::tree: return random_tree(spec.n, rng);
    case Family::random_extremal_vc2: return random_extremal_vc2(spec, rng);
    case Family::random_maximum: {
      auto raw = random_maximum_raw(spec.n, spec.d, rng);
      return permute_coordinates(raw, rng);
    }
  }
  throw PreconditionError("unhandled family");
}

std::vector<std::vector<int>> parse_points_csv(const std::string& text) {
  std::vector<std::vector<int>> points;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<int> point;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      try {
        std::size_t used = 0;
        point.push_back(std::stoi(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError("malformed integer '" + cell + "'", line_no);
      }
    }
    points.push_back(std::move(point));
  }
  return points;
}

std::vector<GeneratedClass> generate_suite(const SuiteSpec& spec) {
  std::vector<GeneratedClass> out;
  Rng rng(spec.seed);
  for (const auto& [family, count] : spec.counts) {
    for (int i = 0; i < count; ++i) {
      GenSpec g;
      g.family = family;
      g.n = spec.n_min + static_cast<int>(below(rng, static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1)));
      g.d = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(std::min(spec.d_max, g.n))));
      g.seed = rng();
      g.density = 0.05;
      if (family == Family::random_extremal_vc2) g.n = std::max(g.n, 2);
      if (family == Family::hyperrectangle) {
        const int axes = 1 + static_cast<int>(below(rng, 2));
        for (int p = 0; p < g.n; ++p) {
          std::vector<int> point;
          for (int a = 0; a < axes; ++a) point.push_back(static_cast<int>(below(rng, 5)));
          g.points.push_back(std::move(point));
        }
      }
      out.push_back({g, generate(g)});
    }
  }
  return out;
}

std::vector<GeneratedClass> intersection_closed_sweep(std::uint64_t seed, std::size_t count, int n_min, int n_max,
                                                      int d_max) {
  if (n_min < 1 || n_max < n_min || n_max > detail::WordSet::kDenseLimit || d_max < 1)
    throw PreconditionError("intersection_closed_sweep: bad ranges");
  constexpr Family kFamilies[] = {Family::downward_closed, Family::random_intersection_closed, Family::monomial_union,
                                  Family::hyperrectangle};
  std::vector<GeneratedClass> out;
  Rng rng(seed);
  while (out.size() < count) {
    GenSpec g;
    g.family = kFamilies[out.size() % std::size(kFamilies)];
    g.n = n_min + static_cast<int>(below(rng, static_cast<std::uint64_t>(n_max - n_min + 1)));
    g.d = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(std::min(d_max, g.n))));
    g.seed = rng();
    g.density = 0.02;
    if (g.family == Family::hyperrectangle) {
      const int axes = 1 + static_cast<int>(below(rng, 2));
      for (int p = 0; p < g.n; ++p) {
        std::vector<int> point;
        for (int a = 0; a < axes; ++a) point.push_back(static_cast<int>(below(rng, 6)));
        g.points.push_back(std::move(point));
      }
    }
    auto cls = generate(g);
    if (vc_dimension(cls) > d_max) continue;
    out.push_back({std::move(g), std::move(cls)});
  }
  return out;
}

}  // namespace cubescheme
