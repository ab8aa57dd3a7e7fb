#include "cubescheme/closure.hpp"

#include <set>

#include "cubescheme/vc_analysis.hpp"
#include "word_set.hpp"

namespace cubescheme {

namespace {

void guard_sweep(int n, bool force, const char* what) {
  if (n > kSweepGuard && !force)
    throw GuardError(std::string(what) + " sweeps 2^n points; n=" + std::to_string(n) + " exceeds the guard of " +
                     std::to_string(kSweepGuard));
}

}  // namespace

bool is_intersection_closed(const ConceptClass& c) {
  const auto words = c.words();
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (!c.contains(words[i] & words[j])) return false;
  return true;
}

ConceptClass intersection_closure(const ConceptClass& c) {
  if (c.empty()) throw PreconditionError("intersection closure of the empty class");
  // Worklist fixpoint: every element is intersected with every earlier one.
  std::vector<Word> list(c.begin(), c.end());
  detail::WordSet seen(c.dim(), list);
  for (std::size_t i = 1; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Word meet = list[i] & list[j];
      if (seen.insert(meet)) list.push_back(meet);
    }
  }
  return ConceptClass(c.dim(), std::move(list));
}

ConceptClass reorient(const ConceptClass& c, const Vertex& origin) {
  if (origin.dim() != c.dim()) throw DimensionMismatch("origin dimension differs from class dimension");
  std::vector<Word> out;
  out.reserve(c.size());
  for (Word w : c) out.push_back(w ^ origin.bits());
  return ConceptClass(c.dim(), std::move(out));
}

MinClosureVc min_closure_vc_bruteforce(const ConceptClass& c, bool force) {
  if (c.empty()) throw PreconditionError("closure sweep of the empty class");
  guard_sweep(c.dim(), force, "origin");
  MinClosureVc best{c.dim() + 1, Vertex(c.dim(), 0)};
  const Word total = Word{1} << c.dim();
  for (Word o = 0; o < total; ++o) {
    const Vertex origin(c.dim(), o);
    const int d = vc_dimension(intersection_closure(reorient(c, origin)));
    if (d < best.vc_dimension) best = {d, origin};
    if (best.vc_dimension == 0) break;
  }
  return best;
}

std::optional<KCloseCertificate> k_close_condition(const ConceptClass& c, int k, bool force) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  const int n = c.dim();
  if (n - k - 1 < 0) return KCloseCertificate{k, Vertex(n, low_mask(n)), {}};
  guard_sweep(n, force, "centre");

  // Per anchor domain K (|K| = k+1, colours = [n] \ K): a projected point x
  // of K is unusable as a centre image when x and all its single flips are
  // hit by c, since then no allowed anchor has an empty fibre.
  const int width = k + 1;
  struct Domain {
    Word anchor_mask;
    std::vector<char> hit;  // indexed by projected point
  };
  std::vector<Domain> domains;
  detail::for_each_subset_of_size(low_mask(n), n - width, [&](Word colours) {
    Domain dom{low_mask(n) & ~colours, std::vector<char>(std::size_t{1} << width, 0)};
    for (Word w : c) dom.hit[project_word(w, CoordSet(dom.anchor_mask))] = 1;
    domains.push_back(std::move(dom));
  });

  auto usable = [&](const Domain& dom, Word x) {
    if (!dom.hit[x]) return true;
    for (int b = 0; b < width; ++b)
      if (!dom.hit[x ^ (Word{1} << b)]) return true;
    return false;
  };

  // Centres from the all-ones vertex downwards, mirroring origins upwards.
  for (Word v = low_mask(n) + 1; v-- > 0;) {
    bool ok = true;
    for (const auto& dom : domains) {
      if (!usable(dom, project_word(v, CoordSet(dom.anchor_mask)))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    KCloseCertificate cert{k, Vertex(n, v), {}};
    for (const auto& dom : domains) {
      const CoordSet anchor_dom(dom.anchor_mask);
      const Word x = project_word(v, anchor_dom);
      Word chosen = x;
      if (dom.hit[x]) {
        for (int b = 0; b < width; ++b) {
          if (!dom.hit[x ^ (Word{1} << b)]) {
            chosen = x ^ (Word{1} << b);
            break;
          }
        }
      }
      cert.cubes.emplace_back(n, CoordSet(low_mask(n) & ~dom.anchor_mask), deposit_bits(chosen, dom.anchor_mask));
    }
    return cert;
  }
  return std::nullopt;
}

int min_k_close(const ConceptClass& c, bool force) {
  guard_sweep(c.dim(), force, "centre");
  for (int k = 0;; ++k)
    if (k_close_condition(c, k, force)) return k;
}

bool verify_k_close_certificate(const ConceptClass& c, const KCloseCertificate& cert) {
  const int n = c.dim();
  if (cert.centre.dim() != n || cert.k < 0) return false;
  const int m = n - cert.k - 1;
  if (m < 0) return cert.cubes.empty();
  if (cert.cubes.size() != binomial(n, m)) return false;
  std::set<Word> colour_sets;
  for (const auto& cube : cert.cubes) {
    if (cube.ambient_dim() != n || cube.dim() != m) return false;
    if (!colour_sets.insert(cube.colours().mask()).second) return false;
    if (!cube.disjoint_from(c)) return false;
    const Word off = (cube.anchor() ^ cert.centre.bits()) & cube.anchor_domain().mask();
    if (std::popcount(off) > 1) return false;
  }
  return true;
}

}  // namespace cubescheme
