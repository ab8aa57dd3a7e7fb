#pragma once

#include <optional>
#include <vector>

#include "cubescheme/cube_core.hpp"

namespace cubescheme {

/// Exhaustive origin and centre sweeps refuse dimensions above this.
inline constexpr int kSweepGuard = 16;

bool is_intersection_closed(const ConceptClass& c);

/// Smallest intersection-closed superset of c. Throws on the empty class.
ConceptClass intersection_closure(const ConceptClass& c);

/// XORs every vertex with `origin`, making it the new all-zero point.
ConceptClass reorient(const ConceptClass& c, const Vertex& origin);

struct MinClosureVc {
  int vc_dimension = 0;
  Vertex origin;  // first minimiser in ascending word order
};

/// Minimum VC dimension of the intersection closure over all 2^n origins.
/// Throws GuardError above kSweepGuard unless `force`.
MinClosureVc min_closure_vc_bruteforce(const ConceptClass& c, bool force = false);

/// Witness for the k-close cube condition: a centre and one cube of
/// dimension n-k-1 per colour set, each outside c and anchored within
/// Hamming distance one of the centre.
struct KCloseCertificate {
  int k = 0;
  Vertex centre;
  std::vector<Cube> cubes;  // ordered by colour set
};

/// First certificate in the fixed search order (centres in descending word
/// order; per colour set the anchor equal to the centre, then single flips
/// by ascending coordinate), or nullopt. For k >= n the required collection
/// is empty and the certificate is vacuous with the all-ones centre.
std::optional<KCloseCertificate> k_close_condition(const ConceptClass& c, int k, bool force = false);

/// Least k admitting a certificate (scans k upward from 0).
int min_k_close(const ConceptClass& c, bool force = false);

/// Independent check of every certificate invariant against c.
bool verify_k_close_certificate(const ConceptClass& c, const KCloseCertificate& cert);

}  // namespace cubescheme
