#include "cubesum/curated.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cubesum/errors.hpp"
#include "curated_data.hpp"

namespace cubesum {

namespace {

CuratedEntry parse_entry(const nlohmann::json& j) {
  CuratedEntry e;
  e.a = Coefficient::parse(j.at("a").get<std::string>());
  e.verdict = j.at("verdict").get<std::string>();
  if (e.verdict != "solvable" && e.verdict != "none") throw ParseError("unknown verdict '" + e.verdict + "'");
  e.count = j.at("count").get<std::string>();
  e.evidence = j.value("evidence", "");
  if (j.contains("rank")) e.rank = j.at("rank").get<int>();
  if (j.contains("torsion")) e.torsion = j.at("torsion").get<int>();
  for (const auto& s : j.value("solutions", nlohmann::json::array())) {
    if (!s.is_array() || s.size() != 3) throw ParseError("solutions must be triples");
    e.solutions.emplace_back(s[0].get<long>(), s[1].get<long>(), s[2].get<long>());
  }
  e.origin = j.value("origin", "transcribed");
  return e;
}

}  // namespace

CuratedTable CuratedTable::parse(std::istream& in) {
  CuratedTable table;
  std::string line;
  bool header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (!header) {
        if (j.value("format", "") != "cubesum-curated-evidence" || j.value("version", 0) != 1)
          throw ParseError("missing or unsupported curated-evidence header");
        header = true;
        continue;
      }
      table.entries_.push_back(parse_entry(j));
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError("curated evidence line " + std::to_string(lineno) + ": " + ex.what());
    } catch (const ParseError& ex) {
      throw ParseError("curated evidence line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  if (!header) throw ParseError("curated evidence: empty input");
  return table;
}

CuratedTable CuratedTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open curated evidence file '" + path + "'");
  return parse(in);
}

const CuratedTable& CuratedTable::builtin() {
  static const CuratedTable table = [] {
    std::istringstream in(detail::kCuratedData);
    return parse(in);
  }();
  return table;
}

std::optional<CuratedEntry> CuratedTable::find(const Coefficient& a) const {
  for (const auto& e : entries_)
    if (e.a == a) return e;
  return std::nullopt;
}

std::optional<CuratedEntry> curated_evidence(const Coefficient& a) { return CuratedTable::builtin().find(a); }

}  // namespace cubesum
