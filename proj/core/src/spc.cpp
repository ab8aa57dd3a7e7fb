#include "cubescheme/spc.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "cubescheme/closure.hpp"
#include "cubescheme/vc_analysis.hpp"
#include "word_set.hpp"

namespace cubescheme {

CoordinateOrdering::CoordinateOrdering(std::vector<int> order) : order_(std::move(order)) {
  const int n = size();
  if (n > kMaxDimension) throw PreconditionError("ordering longer than 63 coordinates");
  Word seen = 0;
  for (int c : order_) {
    if (c < 1 || c > n) throw PreconditionError("ordering entry " + std::to_string(c) + " outside [n]");
    const Word bit = Word{1} << (c - 1);
    if (seen & bit) throw PreconditionError("ordering repeats coordinate " + std::to_string(c));
    seen |= bit;
  }
}

CoordinateOrdering CoordinateOrdering::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  return CoordinateOrdering(std::move(order));
}

CoordinateOrdering CoordinateOrdering::shuffled(int n, std::uint64_t seed) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  return CoordinateOrdering(std::move(order));
}

int CoordinateOrdering::first_in(Word mask) const noexcept {
  for (int c : order_)
    if ((mask >> (c - 1)) & 1U) return c;
  return 0;
}

std::string CoordinateOrdering::str() const {
  std::string s;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(order_[i]);
  }
  return s;
}

namespace {

template <class Sink>
void walk_lambda(Word v, Word w, const CoordinateOrdering& ord, Sink&& sink) {
  Word cur = v;
  sink(cur);
  while (cur != w) {
    const int c = ord.first_in(cur ^ w);
    cur &= ~(Word{1} << (c - 1));
    sink(cur);
  }
}

}  // namespace

std::vector<Vertex> lambda_path(const Vertex& v, const Vertex& w, const CoordinateOrdering& ord) {
  if (v.dim() != w.dim() || ord.size() != v.dim()) throw DimensionMismatch("path endpoints and ordering must share n");
  if (!leq(w, v)) throw PreconditionError("lambda_path needs w between v and the origin");
  std::vector<Vertex> path;
  walk_lambda(v.bits(), w.bits(), ord, [&](Word x) { path.emplace_back(v.dim(), x); });
  return path;
}

ConceptClass shortest_path_closure(const ConceptClass& c, const CoordinateOrdering& ord) {
  if (ord.size() != c.dim()) throw DimensionMismatch("ordering length differs from class dimension");
  if (!is_intersection_closed(c)) throw PreconditionError("shortest_path_closure needs an intersection-closed class");
  std::vector<Word> out(c.begin(), c.end());
  detail::WordSet seen(c.dim(), out);
  for (Word v : c) {
    for (Word w : c) {
      if (w == v || (w & ~v) != 0) continue;
      walk_lambda(v, w, ord, [&](Word x) {
        if (seen.insert(x)) out.push_back(x);
      });
    }
  }
  return ConceptClass(c.dim(), std::move(out));
}

double EmbeddingReport::ratio() const {
  if (d <= 0) return d_star <= 0 ? 1.0 : static_cast<double>(d_star);
  return static_cast<double>(d_star) / static_cast<double>(d);
}

EmbeddingReport verify_embedding(const ConceptClass& c, const ConceptClass& c_star) {
  if (c.dim() != c_star.dim()) throw DimensionMismatch("embedding changes dimension");
  if (!c.subset_of(c_star)) throw PreconditionError("embedding does not contain the input class");

  EmbeddingReport r;
  r.n = c.dim();
  r.size = c.size();
  r.size_star = c_star.size();
  const auto base = classify(c);
  const auto star = classify(c_star);
  r.d = base.vc_dimension;
  r.d_star = star.vc_dimension;

  r.intersection_closed = is_intersection_closed(c_star);
  if (!r.intersection_closed) {
    const auto w = c_star.words();
    for (std::size_t i = 0; i < w.size() && r.violations.empty(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (!c_star.contains(w[i] & w[j])) {
          r.violations.push_back("not intersection closed: " + Vertex(r.n, w[i]).str() + " & " +
                                 Vertex(r.n, w[j]).str() + " missing");
          break;
        }
  }

  const auto spc = check_shortest_path_closed(c_star);
  r.shortest_path_closed = spc.closed;
  if (!spc.closed)
    r.violations.push_back("not shortest-path closed: " + spc.witness->first.str() + " -> " +
                           spc.witness->second.str());

  r.extremal = star.is_extremal;
  if (!r.extremal)
    r.violations.push_back("not extremal: " + std::to_string(star.shattered_count) + " shattered sets vs " +
                           std::to_string(star.cube_type_count) + " cube types");

  r.vc_within_bound = r.d_star <= 11 * std::max(r.d, 0);
  if (!r.vc_within_bound)
    r.violations.push_back("VC bound violated: d*=" + std::to_string(r.d_star) + " > 11*" + std::to_string(r.d));

  const auto cap = static_cast<detail::U128>(r.n) * r.size * r.size;
  r.size_within_bound = static_cast<detail::U128>(r.size_star) <= std::max<detail::U128>(cap, r.size);
  if (!r.size_within_bound)
    r.violations.push_back("size bound violated: |C*|=" + std::to_string(r.size_star) + " > n|C|^2");
  return r;
}

std::uint64_t projection_size_bound(int d) {
  if (d < 1) throw PreconditionError("projection_size_bound needs d >= 1");
  const auto s = static_cast<detail::U128>(sauer_bound(11 * d, d));
  const detail::U128 bound = static_cast<detail::U128>(11 * d) * s * s / 2;
  if (bound > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("projection bound overflows 64 bits");
  return static_cast<std::uint64_t>(bound);
}

std::uint64_t projection_cube_size(int d) {
  if (d < 1 || 11 * d > 63) throw PreconditionError("projection_cube_size needs 1 <= d <= 5");
  return std::uint64_t{1} << (11 * d);
}

}  // namespace cubescheme
