#include "cubescheme/compression.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

#include "cubescheme/parallel.hpp"
#include "cubescheme/vc_analysis.hpp"
#include "word_set.hpp"

namespace cubescheme {

// -------------------------------------------------------- RepresentationMap

int RepresentationMap::size_bound() const noexcept {
  int k = 0;
  for (const auto& [v, rep] : entries_) k = std::max(k, rep.size());
  return k;
}

std::optional<CoordSet> RepresentationMap::lookup(Word vertex) const {
  auto it = entries_.find(vertex);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<Word> RepresentationMap::invert(CoordSet rep) const {
  for (const auto& [v, r] : entries_)
    if (r == rep) return v;
  return std::nullopt;
}

SchemeCheck verify_scheme(const ConceptClass& c, const RepresentationMap& r, int k) {
  if (r.dim() != c.dim()) throw DimensionMismatch("scheme dimension differs from class dimension");
  const int n = c.dim();
  std::vector<Word> reps;
  reps.reserve(c.size());
  for (Word v : c) {
    auto rep = r.lookup(v);
    if (!rep) throw PreconditionError("scheme has no entry for concept " + Vertex(n, v).str());
    reps.push_back(rep->mask());
  }
  for (const auto& [v, rep] : r.entries())
    if (!c.contains(v)) return {false, "entry for non-member " + Vertex(n, v).str()};

  const auto words = c.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (std::popcount(reps[i]) > k)
      return {false, "image of " + Vertex(n, words[i]).str() + " has " + std::to_string(std::popcount(reps[i])) +
                         " coordinates, bound " + std::to_string(k)};
    if (!CoordSet(reps[i]).within(n)) return {false, "image of " + Vertex(n, words[i]).str() + " leaves [n]"};
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (reps[i] == reps[j])
        return {false, "not injective: " + Vertex(n, words[i]).str() + " and " + Vertex(n, words[j]).str() +
                           " share " + CoordSet(reps[i]).str()};
      if (((words[i] ^ words[j]) & (reps[i] | reps[j])) == 0)
        return {false, "clash: " + Vertex(n, words[i]).str() + " and " + Vertex(n, words[j]).str() +
                           " agree on " + CoordSet(reps[i] | reps[j]).str()};
    }
  }
  return {};
}

// ------------------------------------------------------------ corner peeling

namespace {

// For each vertex index of c: how many maximal cubes contain it, and the
// last such cube seen.
struct CubeIncidence {
  std::vector<int> count;
  std::vector<Cube> cube;
};

CubeIncidence maximal_cube_incidence(const ConceptClass& c) {
  CubeIncidence inc{std::vector<int>(c.size(), 0), std::vector<Cube>(c.size())};
  for (const auto& cube : enumerate_cubes(c, true)) {
    for (Word w : cube.words()) {
      const auto i = c.index_of(w);
      ++inc.count[i];
      inc.cube[i] = cube;
    }
  }
  return inc;
}

}  // namespace

std::optional<RepresentationMap> corner_peel(const ConceptClass& c) {
  RepresentationMap r(c.dim());
  ConceptClass cur = c;
  while (!cur.empty()) {
    const auto inc = maximal_cube_incidence(cur);
    std::size_t corner = cur.size();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (inc.count[i] == 1) {
        corner = i;
        break;
      }
    }
    if (corner == cur.size()) return std::nullopt;
    const Word v = cur.words()[corner];
    r.assign(v, inc.cube[corner].colours());
    cur = cur.without(v);
  }
  if (auto check = verify_scheme(c, r, r.size_bound()); !check.valid)
    throw VerificationError("corner peeling produced an invalid scheme: " + check.failure);
  return r;
}

// ---------------------------------------------------------------------- ccc

namespace {

void require_proper_extremal_pair(const ConceptClass& c, const ConceptClass& d) {
  if (c.dim() != d.dim()) throw DimensionMismatch("ccc pair dimensions differ");
  if (!d.subset_of(c) || d.size() == c.size()) throw PreconditionError("ccc pair needs D to be a proper subset of C");
  if (!classify(c).is_extremal) throw PreconditionError("ccc pair needs C extremal");
  if (!classify(d).is_extremal) throw PreconditionError("ccc pair needs D extremal");
}

std::optional<CccCertificate> ccc_unchecked(const ConceptClass& c, const ConceptClass& d) {
  const auto all = enumerate_cubes(c, false);
  const auto maximal = enumerate_cubes(c, true);
  std::set<CoordSet> needed;
  for (const auto& cube : all)
    if (!std::binary_search(maximal.begin(), maximal.end(), cube)) needed.insert(cube.colours());

  std::map<CoordSet, Cube> in_d;
  for (const auto& cube : enumerate_cubes(d, false)) in_d.emplace(cube.colours(), cube);

  CccCertificate cert;
  for (CoordSet colours : needed) {
    auto it = in_d.find(colours);
    if (it == in_d.end()) return std::nullopt;
    cert.witnesses.emplace_back(colours, it->second);
  }
  return cert;
}

}  // namespace

std::optional<CccCertificate> ccc_check(const ConceptClass& c, const ConceptClass& d) {
  require_proper_extremal_pair(c, d);
  return ccc_unchecked(c, d);
}

SandwichBijection sandwich_bijection(const ConceptClass& c, const ConceptClass& d) {
  if (!ccc_check(c, d)) throw PreconditionError("sandwich bijection needs a ccc pair");
  const int n = c.dim();
  SandwichBijection out;
  for (const auto& cube : enumerate_cubes(c, true)) {
    if (cube.subset_of(d)) continue;
    const CoordSet colours = cube.colours();
    const int k = colours.size();
    std::vector<char> hit(std::size_t{1} << k, 0);
    for (Word w : d) hit[project_word(w, colours)] = 1;
    std::vector<Word> missing;
    for (Word p = 0; p < hit.size(); ++p)
      if (!hit[p]) missing.push_back(p);
    if (missing.size() != 1)
      throw PreconditionError("projection of D onto " + colours.str() + " misses " + std::to_string(missing.size()) +
                              " points; expected exactly one");
    const Word fixed = deposit_bits(missing.front(), colours.mask());
    const Cube dual(n, CoordSet(low_mask(n) & ~colours.mask()), fixed);
    out.triples.push_back({cube, dual, cube.anchor() | fixed});
  }

  const auto outside = set_difference(c, d);
  std::vector<Word> specials;
  std::set<Word> colour_sets;
  for (const auto& t : out.triples) {
    specials.push_back(t.special);
    colour_sets.insert(t.cube.colours().mask());
  }
  std::sort(specials.begin(), specials.end());
  if (specials != std::vector<Word>(outside.begin(), outside.end()) || colour_sets.size() != out.triples.size())
    throw VerificationError("special vertices do not biject onto C \\ D");
  return out;
}

std::vector<Cube> complement_cubes_meeting(const ConceptClass& c, const ConceptClass& d) {
  std::vector<Cube> out;
  for (const auto& cube : enumerate_cubes(complement(d), true))
    if (!cube.disjoint_from(c)) out.push_back(cube);
  return out;
}

RepresentationMap extend_scheme(const ConceptClass& c, const ConceptClass& d, const RepresentationMap& rd) {
  const int kd = rd.size_bound();
  if (auto check = verify_scheme(d, rd, kd); !check.valid)
    throw PreconditionError("subclass scheme is invalid: " + check.failure);
  RepresentationMap r = rd;
  int k = kd;
  for (const auto& t : sandwich_bijection(c, d).triples) {
    r.assign(t.special, t.cube.colours());
    k = std::max(k, t.cube.dim());
  }
  if (auto check = verify_scheme(c, r, k); !check.valid)
    throw VerificationError("extended scheme is invalid: " + check.failure);
  return r;
}

// ------------------------------------------------------- finding subclasses

std::string to_string(CccStrategy s) {
  switch (s) {
    case CccStrategy::splitting: return "splitting";
    case CccStrategy::maximum_reduction: return "maximum-reduction";
    case CccStrategy::corner: return "corner";
    case CccStrategy::exhaustive: return "exhaustive";
  }
  return "unknown";
}

namespace {

bool accepts(const ConceptClass& c, const ConceptClass& d) {
  return !d.empty() && d.size() < c.size() && classify(d).is_extremal && ccc_unchecked(c, d).has_value();
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// Splits off a component of C minus the carrier of some colour x (the
// vertices incident to an x-edge). Candidates are tried smallest first over
// all colours, ties by colour then smallest member.
std::optional<ConceptClass> try_splitting(const ConceptClass& c) {
  const int n = c.dim();
  const auto words = c.words();
  const auto nbrs = neighbour_masks(c);
  struct Candidate {
    std::size_t size;
    int colour;
    Word first;
    std::vector<Word> members;
  };
  std::vector<Candidate> candidates;
  for (int x = 0; x < n; ++x) {
    const Word bit = Word{1} << x;
    std::vector<std::size_t> parent(words.size());
    std::iota(parent.begin(), parent.end(), 0);
    bool has_edge = false;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (nbrs[i] & bit) {
        has_edge = true;
        continue;
      }
      for (Word m = nbrs[i]; m != 0; m &= m - 1) {
        const std::size_t j = c.index_of(words[i] ^ (m & (~m + 1)));
        if (!(nbrs[j] & bit)) parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
    if (!has_edge) continue;
    std::map<std::size_t, std::vector<Word>> components;
    for (std::size_t i = 0; i < words.size(); ++i)
      if (!(nbrs[i] & bit)) components[find_root(parent, i)].push_back(words[i]);
    for (auto& [root, members] : components)
      candidates.push_back({members.size(), x, members.front(), std::move(members)});
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.size, a.colour, a.first) < std::tie(b.size, b.colour, b.first);
  });
  for (const auto& cand : candidates) {
    ConceptClass d = set_difference(c, ConceptClass(n, cand.members));
    if (accepts(c, d)) return d;
  }
  return std::nullopt;
}

// A maximum subclass of VC dimension d - 1 inside the maximum class c of VC
// dimension d, on the coordinates of `support`: the lower side of the
// reduction along the first colour x, plus the upper side of a maximum
// subclass one dimension lower inside that reduction.
std::vector<Word> maximum_subclass(const std::vector<Word>& c, Word support, int d) {
  if (d == 1) return {c.front()};
  const std::unordered_set<Word> members(c.begin(), c.end());
  Word bit = 0;
  std::vector<Word> lower;
  for (Word m = support; m != 0 && lower.empty(); m &= m - 1) {
    bit = m & (~m + 1);
    for (Word w : c)
      if (!(w & bit) && members.count(w | bit)) lower.push_back(w);
  }
  std::sort(lower.begin(), lower.end());
  std::vector<Word> out = lower;
  for (Word w : maximum_subclass(lower, support & ~bit, d - 1)) out.push_back(w | bit);
  return out;
}

std::optional<ConceptClass> try_maximum_reduction(const ConceptClass& c, const ClassReport& report) {
  if (!report.is_maximum || report.vc_dimension < 1) return std::nullopt;
  const std::vector<Word> words(c.begin(), c.end());
  ConceptClass d(c.dim(), maximum_subclass(words, low_mask(c.dim()), report.vc_dimension));
  if (accepts(c, d)) return d;
  return std::nullopt;
}

std::optional<ConceptClass> try_corner(const ConceptClass& c) {
  const auto inc = maximal_cube_incidence(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (inc.count[i] != 1) continue;
    ConceptClass d = c.without(c.words()[i]);
    if (accepts(c, d)) return d;
  }
  return std::nullopt;
}

std::optional<ConceptClass> try_exhaustive(const ConceptClass& c) {
  if (c.dim() > 6 || c.size() > kExhaustiveClassLimit) return std::nullopt;
  const auto words = c.words();
  const std::size_t m = words.size();
  for (std::size_t keep = m - 1; keep >= 1; --keep) {
    std::vector<std::size_t> idx(keep);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Word> sub;
      sub.reserve(keep);
      for (auto i : idx) sub.push_back(words[i]);
      ConceptClass d(c.dim(), std::move(sub));
      if (accepts(c, d)) return d;
      std::size_t i = keep;
      while (i > 0 && idx[i - 1] == m - keep + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < keep; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CccSubclass> find_ccc_subclass(const ConceptClass& c) {
  const auto report = classify(c);
  if (!report.is_extremal) throw PreconditionError("find_ccc_subclass needs an extremal class");
  if (c.size() < 2) throw PreconditionError("find_ccc_subclass needs at least two concepts");
  if (auto d = try_splitting(c)) return CccSubclass{std::move(*d), CccStrategy::splitting};
  if (auto d = try_maximum_reduction(c, report)) return CccSubclass{std::move(*d), CccStrategy::maximum_reduction};
  if (auto d = try_corner(c)) return CccSubclass{std::move(*d), CccStrategy::corner};
  if (auto d = try_exhaustive(c)) return CccSubclass{std::move(*d), CccStrategy::exhaustive};
  return std::nullopt;
}

// ----------------------------------------------------------- building schemes

SchemeBuild build_scheme_detailed(const ConceptClass& c) {
  auto report = classify(c);
  if (!report.is_extremal) throw PreconditionError("build_scheme needs an extremal class");

  std::vector<ConceptClass> chain{c};
  SchemeBuild out;
  while (report.vc_dimension > 1) {
    auto sub = find_ccc_subclass(chain.back());
    if (!sub) throw NoCccChain(chain.back());
    out.strategies.push_back(sub->strategy);
    chain.push_back(std::move(sub->subclass));
    report = classify(chain.back());
  }

  auto base = corner_peel(chain.back());
  if (!base) throw NoCccChain(chain.back());
  RepresentationMap r = std::move(*base);
  for (std::size_t i = chain.size() - 1; i-- > 0;) r = extend_scheme(chain[i], chain[i + 1], r);

  out.k = r.size_bound();
  if (auto check = verify_scheme(c, r, out.k); !check.valid)
    throw VerificationError("built scheme is invalid: " + check.failure);
  for (const auto& cls : chain) out.chain.push_back(cls.size());
  out.map = std::move(r);
  return out;
}

RepresentationMap build_scheme(const ConceptClass& c) { return build_scheme_detailed(c).map; }

// ---------------------------------------------------------------- protocol

std::size_t SchemeCache::KeyHash::operator()(const Key& k) const noexcept {
  Word h = static_cast<Word>(k.n) * 0x9E3779B97F4A7C15ULL ^ k.domain;
  for (Word w : k.words) h = (h ^ w) * 0x100000001B3ULL;
  return static_cast<std::size_t>(h);
}

std::shared_ptr<const RepresentationMap> SchemeCache::get(const ConceptClass& c, CoordSet domain) {
  Key key{c.dim(), std::vector<Word>(c.begin(), c.end()), domain.mask()};
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  auto built = std::make_shared<const RepresentationMap>(build_scheme(project(c, domain)));
  std::unique_lock lock(mutex_);
  return entries_.emplace(std::move(key), std::move(built)).first->second;
}

std::size_t SchemeCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

namespace {

std::shared_ptr<const RepresentationMap> scheme_for(const ConceptClass& c, CoordSet domain, SchemeCache* cache) {
  if (!domain.within(c.dim())) throw PreconditionError("domain " + domain.str() + " outside [n]");
  if (cache) return cache->get(c, domain);
  return std::make_shared<const RepresentationMap>(build_scheme(project(c, domain)));
}

}  // namespace

CoordSet compress_sample(const ConceptClass& c, CoordSet domain, const Vertex& labels, SchemeCache* cache) {
  if (labels.dim() != domain.size()) throw DimensionMismatch("labelling length differs from domain size");
  if (!domain.within(c.dim())) throw PreconditionError("domain " + domain.str() + " outside [n]");
  if (!project(c, domain).contains(labels.bits()))
    throw PreconditionError("labelling " + labels.str() + " is not realised by the class");
  const auto scheme = scheme_for(c, domain, cache);
  const auto rep = scheme->lookup(labels.bits());
  if (!rep) throw VerificationError("scheme misses a realised labelling");
  return CoordSet(deposit_bits(rep->mask(), domain.mask()));
}

Vertex reconstruct(const ConceptClass& c, CoordSet domain, CoordSet rep, SchemeCache* cache) {
  if (!rep.subset_of(domain)) throw PreconditionError("representation " + rep.str() + " leaves the domain");
  const auto scheme = scheme_for(c, domain, cache);
  const auto concept_word = scheme->invert(CoordSet(extract_bits(rep.mask(), domain.mask())));
  if (!concept_word) throw PreconditionError("representation " + rep.str() + " is not in the scheme's image");
  return Vertex(domain.size(), *concept_word);
}

RoundTripSummary roundtrip_check(const ConceptClass& c, const std::vector<CoordSet>& domains, SchemeCache& cache,
                                 unsigned threads) {
  std::vector<RoundTripSummary> per(domains.size());
  parallel_for(
      domains.size(),
      [&](std::size_t i) {
        const CoordSet domain = domains[i];
        auto& out = per[i];
        out.domains = 1;
        for (Word w : project(c, domain)) {
          ++out.labellings;
          const Vertex labels(domain.size(), w);
          std::string failure;
          try {
            const CoordSet rep = compress_sample(c, domain, labels, &cache);
            out.max_rep_size = std::max(out.max_rep_size, rep.size());
            const Vertex back = reconstruct(c, domain, rep, &cache);
            if (back != labels) failure = "reconstructed " + back.str();
          } catch (const std::exception& e) {
            failure = e.what();
          }
          if (!failure.empty() && out.failures++ == 0)
            out.first_failure = "domain " + domain.str() + " labelling " + labels.str() + ": " + failure;
        }
      },
      threads);
  RoundTripSummary total;
  for (const auto& p : per) {
    total.domains += p.domains;
    total.labellings += p.labellings;
    total.max_rep_size = std::max(total.max_rep_size, p.max_rep_size);
    if (total.failures == 0 && p.failures > 0) total.first_failure = p.first_failure;
    total.failures += p.failures;
  }
  return total;
}

std::vector<CoordSet> all_domains(int n) {
  if (n < 0 || n > kMaxDimension - 1) throw PreconditionError("all_domains needs 0 <= n <= 62");
  std::vector<CoordSet> out;
  for (Word m = 0; m < (Word{1} << n); ++m) out.emplace_back(m);
  return out;
}

}  // namespace cubescheme
