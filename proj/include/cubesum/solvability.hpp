#pragma once

// Non-existence criteria and the combined verdict engine.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cubesum/curated.hpp"
#include "cubesum/model.hpp"

namespace cubesum {

enum class TheoremId { AEqualsOne, Theorem_a4, PrimePower, PQSquared, CuratedRankZero };

std::string_view theorem_name(TheoremId id);

struct NoPrimitive {
  TheoremId reason;
  std::string note;
};

struct Solvable {
  CanonicalTriple witness;
  /// "family:<name>", "torsion", "integer-point", "search", "covering" or "curated".
  std::string source;
};

struct Unknown {};

struct TorsionEvidence {
  std::size_t order = 1;
  /// Distinct primitive classes among the torsion points.
  std::vector<CanonicalTriple> primitive_classes;
};

struct PointSearchEvidence {
  std::int64_t bound = 0;
  std::size_t points = 0;
  std::vector<CanonicalTriple> primitive_classes;
};

struct SearchEvidence {
  std::int64_t height = 0;
  std::size_t found = 0;
};

struct CoveringEvidence {
  std::int64_t bound = 0;
  std::size_t coverings = 0;
  std::size_t found = 0;
};

struct CuratedNote {
  CuratedEntry entry;
};

using EvidenceItem =
    std::variant<TorsionEvidence, PointSearchEvidence, SearchEvidence, CoveringEvidence, CuratedNote>;

struct Verdict {
  std::variant<Solvable, NoPrimitive, Unknown> outcome;
  std::vector<EvidenceItem> evidence;

  bool solvable() const { return std::holds_alternative<Solvable>(outcome); }
  bool no_primitive() const { return std::holds_alternative<NoPrimitive>(outcome); }
  bool unknown() const { return std::holds_alternative<Unknown>(outcome); }
};

/// p^n = 24a/(a - 1) with p = 2 mod 3 prime, 3 not dividing n, every prime
/// factor of p^n - 27 congruent to 2 mod 3, and a != -1/11.
std::optional<NoPrimitive> check_prime_power(const Coefficient& a);

/// p q^2 = 24a/(a - 1) with (p, q) in {(2,3), (5,2), (7,2)} or (2, Q) where
/// Q = 1 mod 3 is prime, 2Q^2 - 27 is prime and 4 is a cubic non-residue mod Q.
std::optional<NoPrimitive> check_pq_squared(const Coefficient& a);

/// Coprime solutions {x, y, y} with y > 0. Integer a is answered by the
/// classification of equal-pair solutions; other a by a search with
/// |x|, y <= bound, or OutOfTheoremScope when integer_only is set.
std::vector<Triple> equal_pair_solve(const Coefficient& a, bool integer_only, long bound = 200);

struct ClassifyOptions {
  std::int64_t search_height = 100;
  /// Parameter bound for the family-inverse stage.
  long family_bound = 50;
  /// |X| bound for the integer point search on the reduced curve.
  std::int64_t point_bound = 10000;
  /// Coordinate bound for the covering search; 0 skips it.
  std::int64_t covering_bound = 60;
  unsigned parallelism = 1;
  bool use_curated = false;
  /// Overrides the builtin table when set.
  const CuratedTable* curated = nullptr;
};

/// Theorems, then family witnesses, elliptic torsion and integer points,
/// bounded search, covering search, and finally curated evidence. Throws InvalidCoefficient
/// for a = 0.
Verdict classify(const Coefficient& a, const ClassifyOptions& options);
Verdict classify(const Coefficient& a, std::int64_t search_height);

/// Witness from the parametric families alone.
std::optional<Solvable> family_witness(const Coefficient& a, long bound);

}  // namespace cubesum
