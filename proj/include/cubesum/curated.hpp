#pragma once

// Transcribed (not self-computed) evidence: verdicts, rank notes and
// low-lying solutions for selected coefficients, read from a JSON-lines file.
//
// File format, one JSON object per line:
//   {"format": "cubesum-curated-evidence", "version": 1}          header, first line
//   {"a": "num/den", "verdict": "solvable" | "none", "count": "0" | "1" | "infinite",
//    "evidence": text, "rank": int?, "torsion": int?,
//    "solutions": [[x, y, z], ...], "origin": "transcribed"}
// Blank lines and lines starting with '#' are ignored.

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "cubesum/model.hpp"

namespace cubesum {

struct CuratedEntry {
  Coefficient a{1};
  /// "solvable" or "none"
  std::string verdict;
  /// "0", "1" or "infinite"
  std::string count;
  std::string evidence;
  std::optional<int> rank;
  std::optional<int> torsion;
  std::vector<Triple> solutions;
  std::string origin;

  bool no_primitive() const { return verdict == "none"; }
};

class CuratedTable {
 public:
  /// The table compiled into the library.
  static const CuratedTable& builtin();
  /// Throws ParseError on malformed input or a wrong header.
  static CuratedTable parse(std::istream& in);
  static CuratedTable load(const std::string& path);

  std::optional<CuratedEntry> find(const Coefficient& a) const;
  const std::vector<CuratedEntry>& entries() const { return entries_; }

 private:
  std::vector<CuratedEntry> entries_;
};

/// Lookup in the builtin table.
std::optional<CuratedEntry> curated_evidence(const Coefficient& a);

}  // namespace cubesum
