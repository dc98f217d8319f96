#pragma once

// Bounded exhaustive enumeration of primitive solutions and brute-force
// oracles for the auxiliary equations used in the non-existence proofs.

#include <array>
#include <cstdint>
#include <string>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "cubesum/model.hpp"

namespace cubesum {

struct SearchConfig {
  Coefficient a;
  /// Maximum |coordinate| of the canonical triple; must be >= 1.
  std::int64_t height = 1;
  unsigned parallelism = 1;
  /// Stop once the smallest height holding a solution has been fully scanned.
  bool stop_at_first = false;
};

struct SearchResult {
  /// Deduplicated, sorted by canonical_less.
  std::vector<CanonicalTriple> primitives;
  /// False only when stop_at_first cut the scan short.
  bool exhausted = true;
  /// Height actually covered.
  std::int64_t height = 0;
};

/// For each x in [1, H] and |y| <= x, finds every integer z with |z| <= |y|
/// solving the master equation read as a cubic in z. Throws InvalidCoefficient
/// for a = 0 and PreconditionViolated for height < 1.
SearchResult enumerate_primitive(const SearchConfig& cfg);

/// a = 9 up to height 200.
SearchResult table1_scan(unsigned parallelism = 1);

struct NScanEntry {
  long n = 0;
  std::optional<CanonicalTriple> witness;
  /// "family:<name>", "search" or "covering"; empty when no witness was found.
  std::string source;
};

/// For N = 1..n_max: try the square families, then a search at `height`, then
/// a covering search at `covering_bound` (0 skips it). A missing witness says
/// nothing about membership.
std::vector<NScanEntry> n_sequence_scan(long n_max, std::int64_t height, std::int64_t covering_bound = 0,
                                        unsigned parallelism = 1);

/// d1 X^3 + d2 Y^3 + d3 Z^3 = (kn/kd) XYZ. A point gives t = d1 X^3,
/// u = d2 Y^3, v = d3 Z^3 on the t,u,v form.
struct Covering {
  Integer d1, d2, d3, kn, kd;
};

/// Cube-free d1, d2, d3 > 0 supported on the primes of 6 aL (aL - aR) with
/// 24a d1 d2 d3/(a - 1) a rational cube, keeping only coverings with a
/// primitive solution modulo a small power of each of those primes. Every
/// primitive solution of the master equation lies on one of them. Throws
/// PreconditionViolated for a = 1.
std::vector<Covering> tuv_coverings(const Coefficient& a);

/// Primitive solutions reached from covering points with max(|X|, |Y|, |Z|) <= bound.
SearchResult covering_search(const Coefficient& a, std::int64_t bound, unsigned parallelism = 1);

/// Coprime (q, r, t) with qrt != 0 and |q|, |r| <= bound solving
/// q^4 - r^4 + q^2 r^2 = t^2.
std::vector<std::tuple<long, long, long>> oracle_lemma31(long bound);

/// All (x, y) with |x|, |y| <= bound and x^3 + 2y^3 = c.
std::vector<std::pair<long, long>> oracle_thue(long c, long bound);

/// Exact integer roots of c3 z^3 + c2 z^2 + c1 z + c0 in [lo, hi], ascending.
/// Returns nullopt when the polynomial vanishes identically.
std::optional<std::vector<Integer>> integer_roots_in_range(const std::array<Integer, 4>& coeffs, const Integer& lo,
                                                           const Integer& hi);

}  // namespace cubesum
