#pragma once

// Command-line front end: argument handling, output records, the
// classification cache and the individual commands.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubesum/model.hpp"

namespace cubesum::cli {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kZeroCoefficient = 3,
  kExcluded = 4,
  kCacheMiss = 5,
};

/// Everything a command prints. Keys serialize in sorted order.
struct OutputRecord {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<std::string> notes;
  std::string version = kVersion;

  json to_json() const;
  static OutputRecord from_json(const json& j);
  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

enum class Format { Tsv, Json };

std::string render(const OutputRecord& record, Format format);

json integer_json(const Integer& n);
json triple_json(const Triple& t);

/// Append-only JSON-lines log of classify results.
class ClassifyCache {
 public:
  explicit ClassifyCache(std::string path) : path_(std::move(path)) {}

  /// $CUBESUM_CACHE, else $XDG_CACHE_HOME/cubesum/classify.jsonl, else
  /// ~/.cache/cubesum/classify.jsonl.
  static std::string default_path();

  /// Entry with the largest height for (a, curated); later lines win ties.
  std::optional<json> lookup(const Coefficient& a, bool curated) const;
  /// Throws Error when the file cannot be written.
  void append(const Coefficient& a, bool curated, std::int64_t height, const OutputRecord& record) const;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubesum::cli
