#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cubesum/elliptic.hpp"
#include "cubesum/errors.hpp"
#include "cubesum/families.hpp"
#include "cubesum/search.hpp"
#include "cubesum/solvability.hpp"

namespace cubesum::cli {

json OutputRecord::to_json() const {
  return json{{"command", command}, {"inputs", inputs}, {"result", result}, {"notes", notes}, {"version", version}};
}

OutputRecord OutputRecord::from_json(const json& j) {
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.version = j.at("version").get<std::string>();
  return r;
}

json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

json triple_json(const Triple& t) { return json::array({integer_json(t.x), integer_json(t.y), integer_json(t.z)}); }

namespace {

std::string coefficient_key(const Coefficient& a) { return a.num().get_str() + "/" + a.den().get_str(); }

std::string cell(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array() && v.size() == 3 && std::all_of(v.begin(), v.end(), [](const json& e) { return !e.is_array(); })) {
    std::string s = "{";
    for (std::size_t i = 0; i < 3; ++i) s += (i ? ", " : "") + cell(v[i]);
    return s + "}";
  }
  return v.dump();
}

std::string triples_cell(const json& list) {
  if (list.empty()) return "-";
  std::string s;
  for (const auto& t : list) s += (s.empty() ? "" : " ") + cell(t);
  return s;
}

void kv(std::ostringstream& os, const std::string& key, const json& value) { os << key << '\t' << cell(value) << '\n'; }

std::string evidence_cell(const json& e) {
  const std::string kind = e.at("kind");
  if (kind == "torsion")
    return "torsion order " + e.at("order").dump() + ", primitive classes " + triples_cell(e.at("primitive_classes"));
  if (kind == "integer-points")
    return "integer points |X| <= " + e.at("bound").dump() + ": " + e.at("points").dump() + ", primitive classes " +
           triples_cell(e.at("primitive_classes"));
  if (kind == "search") return "search height " + e.at("height").dump() + ": " + e.at("found").dump() + " found";
  if (kind == "covering")
    return "covering search bound " + e.at("bound").dump() + " over " + e.at("coverings").dump() +
           " coverings: " + e.at("found").dump() + " found";
  if (kind == "curated") return "transcribed: " + e.at("evidence").get<std::string>();
  return e.dump();
}

std::string tsv_classify(const OutputRecord& r) {
  std::ostringstream os;
  const json& res = r.result;
  kv(os, "a", r.inputs.at("a"));
  kv(os, "verdict", res.at("verdict"));
  if (res.contains("witness")) {
    kv(os, "witness", res.at("witness"));
    kv(os, "source", res.at("source"));
  }
  if (res.contains("reason")) {
    kv(os, "reason", res.at("reason"));
    kv(os, "note", res.at("note"));
  }
  for (const auto& e : res.at("evidence")) kv(os, "evidence", evidence_cell(e));
  return os.str();
}

std::string tsv_family(const OutputRecord& r) {
  std::ostringstream os;
  const json& res = r.result;
  kv(os, "family", res.at("family"));
  std::string params;
  for (const auto& p : res.at("params")) params += (params.empty() ? "" : " ") + cell(p);
  kv(os, "params", params);
  kv(os, "a", res.at("a"));
  kv(os, "raw", res.at("raw"));
  kv(os, "primitive", res.at("primitive"));
  kv(os, "is_primitive", res.at("is_primitive"));
  return os.str();
}

std::string tsv_table(const OutputRecord& r) {
  std::ostringstream os;
  if (r.inputs.at("which") == 1) {
    os << "x\ty\tz\tl1\tl2\n";
    for (const auto& row : r.result.at("rows")) {
      const auto& t = row.at("triple");
      os << cell(t[0]) << '\t' << cell(t[1]) << '\t' << cell(t[2]) << '\t' << cell(row.at("l1")) << '\t'
         << cell(row.at("l2")) << '\n';
    }
    return os.str();
  }
  os << "a\tverdict\tbasis\twitness\tcount (transcribed)\tevidence (transcribed)\tlow-lying solutions (transcribed; "
        "status self-computed)\n";
  for (const auto& row : r.result.at("rows")) {
    std::string sols;
    for (const auto& s : row.at("solutions")) {
      std::string status = !s.at("primitive").get<bool>() ? "NOT PRIMITIVE"
                           : s.at("discovered").get<bool>() ? "discovered"
                                                            : "verified, not discovered";
      sols += (sols.empty() ? "" : "; ") + cell(s.at("triple")) + " [" + status + "]";
    }
    os << cell(row.at("a")) << '\t' << cell(row.at("verdict")) << '\t' << cell(row.at("basis")) << '\t'
       << cell(row.at("witness")) << '\t' << cell(row.at("count")) << '\t' << cell(row.at("evidence")) << '\t'
       << (sols.empty() ? "-" : sols) << '\n';
  }
  return os.str();
}

std::string tsv_scan_n(const OutputRecord& r) {
  std::ostringstream os;
  os << "N\twitness\tsource\n";
  for (const auto& row : r.result.at("rows"))
    os << cell(row.at("n")) << '\t' << cell(row.at("witness")) << '\t' << cell(row.at("source")) << '\n';
  return os.str();
}

std::string points_tsv(const json& pts) {
  std::ostringstream os;
  for (const auto& p : pts)
    os << "point\t" << cell(p.at("x")) << '\t' << cell(p.at("y")) << '\t' << cell(p.at("order")) << '\t'
       << cell(p.at("triple")) << '\t' << cell(p.at("canonical")) << '\t' << (p.at("primitive").get<bool>() ? "primitive" : "-")
       << '\n';
  return os.str();
}

std::string tsv_ec(const OutputRecord& r) {
  std::ostringstream os;
  const json& res = r.result;
  kv(os, "a", r.inputs.at("a"));
  kv(os, "A", res.at("A"));
  kv(os, "B", res.at("B"));
  kv(os, "scale", res.at("scale"));
  kv(os, "discriminant", res.at("discriminant"));
  kv(os, "singular", res.at("singular"));
  if (!res.at("singular").get<bool>()) {
    kv(os, "torsion_order", res.at("torsion_order"));
    os << "# torsion: X\tY\torder\ttriple\tcanonical\tprimitive\n" << points_tsv(res.at("torsion"));
    os << "# integer points |X| <= " << cell(r.inputs.at("bound")) << '\n' << points_tsv(res.at("integer_points"));
  }
  return os.str();
}

std::string tsv_search(const OutputRecord& r) {
  std::ostringstream os;
  os << "x\ty\tz\n";
  for (const auto& t : r.result.at("primitives")) os << cell(t[0]) << '\t' << cell(t[1]) << '\t' << cell(t[2]) << '\n';
  return os.str();
}

std::string tsv_oracle(const OutputRecord& r) {
  std::ostringstream os;
  for (const auto& s : r.result.at("solutions")) {
    std::string line;
    for (const auto& v : s) line += (line.empty() ? "" : "\t") + cell(v);
    os << line << '\n';
  }
  return os.str();
}

}  // namespace

std::string render(const OutputRecord& record, Format format) {
  if (format == Format::Json) return record.to_json().dump(2) + "\n";
  std::string body;
  if (record.command == "classify")
    body = tsv_classify(record);
  else if (record.command == "family")
    body = tsv_family(record);
  else if (record.command == "table")
    body = tsv_table(record);
  else if (record.command == "scan-n")
    body = tsv_scan_n(record);
  else if (record.command == "ec")
    body = tsv_ec(record);
  else if (record.command == "search")
    body = tsv_search(record);
  else
    body = tsv_oracle(record);
  for (const auto& n : record.notes) body += "# " + n + "\n";
  return body;
}

std::string ClassifyCache::default_path() {
  if (const char* p = std::getenv("CUBESUM_CACHE"); p && *p) return p;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/cubesum/classify.jsonl";
  const char* home = std::getenv("HOME");
  return std::string(home && *home ? home : ".") + "/.cache/cubesum/classify.jsonl";
}

std::optional<json> ClassifyCache::lookup(const Coefficient& a, bool curated) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  const std::string key = coefficient_key(a);
  std::optional<json> best;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.value("a", "") != key || j.value("curated", false) != curated) continue;
    if (!best || j.value("height", std::int64_t{0}) >= best->value("height", std::int64_t{0})) best = std::move(j);
  }
  return best;
}

void ClassifyCache::append(const Coefficient& a, bool curated, std::int64_t height, const OutputRecord& record) const {
  const std::filesystem::path p(path_);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot write cache file '" + path_ + "'");
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  const json entry{{"a", coefficient_key(a)},
                   {"curated", curated},
                   {"verdict", record.result.at("verdict")},
                   {"evidence", record.result.at("evidence")},
                   {"height", height},
                   {"timestamp", stamp},
                   {"record", record.to_json()}};
  out << entry.dump() << '\n';
}

namespace {

struct Context {
  Format format = Format::Tsv;
  unsigned jobs = 1;
  std::ostream& out;
  std::ostream& err;
};

/// Error raised for malformed command-line values.
struct UsageError : Error {
  using Error::Error;
};

Coefficient parse_coefficient(const std::string& text) {
  try {
    return Coefficient::parse(text);
  } catch (const Error& e) {
    throw UsageError("cannot parse coefficient '" + text + "': " + e.what());
  }
}

json canonical_list(const std::vector<CanonicalTriple>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(triple_json(c.triple));
  return out;
}

json evidence_json(const EvidenceItem& item) {
  return std::visit(
      [](const auto& e) -> json {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, TorsionEvidence>) {
          return {{"kind", "torsion"}, {"order", e.order}, {"primitive_classes", canonical_list(e.primitive_classes)}};
        } else if constexpr (std::is_same_v<T, PointSearchEvidence>) {
          return {{"kind", "integer-points"},
                  {"bound", e.bound},
                  {"points", e.points},
                  {"primitive_classes", canonical_list(e.primitive_classes)}};
        } else if constexpr (std::is_same_v<T, SearchEvidence>) {
          return {{"kind", "search"}, {"height", e.height}, {"found", e.found}};
        } else if constexpr (std::is_same_v<T, CoveringEvidence>) {
          return {{"kind", "covering"}, {"bound", e.bound}, {"coverings", e.coverings}, {"found", e.found}};
        } else {
          json sols = json::array();
          for (const auto& t : e.entry.solutions) sols.push_back(triple_json(t));
          json j{{"kind", "curated"},     {"origin", e.entry.origin},     {"verdict", e.entry.verdict},
                 {"count", e.entry.count}, {"evidence", e.entry.evidence}, {"solutions", sols}};
          if (e.entry.rank) j["rank"] = *e.entry.rank;
          if (e.entry.torsion) j["torsion"] = *e.entry.torsion;
          return j;
        }
      },
      item);
}

json verdict_json(const Verdict& v) {
  json j;
  if (const auto* s = std::get_if<Solvable>(&v.outcome)) {
    j["verdict"] = "solvable";
    j["witness"] = triple_json(s->witness.triple);
    j["source"] = s->source;
  } else if (const auto* n = std::get_if<NoPrimitive>(&v.outcome)) {
    j["verdict"] = "no-primitive";
    j["reason"] = std::string(theorem_name(n->reason));
    j["note"] = n->note;
  } else {
    j["verdict"] = "unknown";
  }
  j["evidence"] = json::array();
  for (const auto& e : v.evidence) j["evidence"].push_back(evidence_json(e));
  return j;
}

// classify

struct ClassifyArgs {
  std::string a;
  std::int64_t height = 100;
  std::int64_t covering_bound = 60;
  bool use_curated = false;
  bool cache_only = false;
  bool no_cache = false;
  std::string curated_file;
  std::string cache_file;
};

int cmd_classify(const ClassifyArgs& args, Context& ctx) {
  const Coefficient a = parse_coefficient(args.a);
  if (a.is_zero()) {
    ctx.err << "error: a = 0 is excluded\n";
    return kZeroCoefficient;
  }
  const ClassifyCache cache(args.cache_file.empty() ? ClassifyCache::default_path() : args.cache_file);
  if (args.cache_only) {
    const auto hit = cache.lookup(a, args.use_curated);
    if (!hit) {
      ctx.err << "error: no cached verdict for a = " << a.to_string() << " in " << cache.path() << '\n';
      return kCacheMiss;
    }
    ctx.out << render(OutputRecord::from_json(hit->at("record")), ctx.format);
    return kOk;
  }

  std::optional<CuratedTable> table;
  if (!args.curated_file.empty()) table = CuratedTable::load(args.curated_file);
  ClassifyOptions o;
  o.search_height = args.height;
  o.covering_bound = args.covering_bound;
  o.parallelism = ctx.jobs;
  o.use_curated = args.use_curated;
  o.curated = table ? &*table : nullptr;
  const Verdict v = classify(a, o);

  OutputRecord r;
  r.command = "classify";
  r.inputs = {{"a", a.to_string()}, {"height", args.height}, {"covering_bound", args.covering_bound},
              {"use_curated", args.use_curated}};
  r.result = verdict_json(v);
  if (v.unknown()) r.notes.push_back("no witness and no applicable criterion; emptiness at finite height is not a proof");
  if (args.use_curated) r.notes.push_back("curated evidence is transcribed, not computed");
  ctx.out << render(r, ctx.format);
  if (!args.no_cache) {
    try {
      cache.append(a, args.use_curated, args.height, r);
    } catch (const Error& e) {
      ctx.err << "warning: " << e.what() << '\n';
    }
  }
  return kOk;
}

// family

struct FamilySpec {
  std::size_t arity;
  std::string usage;
  std::function<std::vector<FamilySolution>(const std::vector<std::string>&)> make;
};

Integer int_arg(const std::string& s) {
  try {
    return parse_integer(s);
  } catch (const Error& e) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
}

Rational rational_arg(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const Error& e) {
    throw UsageError("expected a rational, got '" + s + "'");
  }
}

long long_arg(const std::string& s) {
  const Integer v = int_arg(s);
  if (!v.fits_slong_p()) throw UsageError("parameter '" + s + "' is out of range");
  return v.get_si();
}

std::vector<FamilySolution> only(FamilySolution s) { return {std::move(s)}; }

std::vector<FamilySolution> square_of(FamilyId id, const Integer& n) {
  std::vector<FamilySolution> out;
  for (auto& s : square_families(n))
    if (s.family == id) out.push_back(std::move(s));
  if (out.empty())
    throw ExcludedParameters(std::string(family_name(id)) + ": N = " + n.get_str() +
                             (id == FamilyId::SquareCube ? " is not a cube k^3 with |k| != 1" : " is not F_2k with k >= 2"));
  return out;
}

const std::map<std::string, FamilySpec>& family_catalog() {
  using V = std::vector<std::string>;
  static const std::map<std::string, FamilySpec> catalog{
      {"cube", {2, "p q", [](const V& v) { return only(cube_family(int_arg(v[0]), int_arg(v[1]))); }}},
      {"frac5q2", {2, "p q", [](const V& v) { return only(frac_family_5q2(int_arg(v[0]), int_arg(v[1]))); }}},
      {"fib",
       {1, "n",
        [](const V& v) {
          const long n = long_arg(v[0]);
          if (n < 0 || n > 100000) throw UsageError("n must be in [0, 100000]");
          return only(fibonacci_family(static_cast<unsigned>(n)));
        }}},
      {"frac2p2q2", {2, "p q", [](const V& v) { return only(frac_family_2p2q2(int_arg(v[0]), int_arg(v[1]))); }}},
      {"cubicfrac", {2, "p q", [](const V& v) { return only(cubic_frac_family(int_arg(v[0]), int_arg(v[1]))); }}},
      {"rs", {2, "r s", [](const V& v) { return only(rs_family(rational_arg(v[0]), rational_arg(v[1]))); }}},
      {"minus4", {1, "q", [](const V& v) { return only(minus_four_family(int_arg(v[0]))); }}},
      {"reciprocal",
       {2, "p q", [](const V& v) { return only(reciprocal_integer_family(int_arg(v[0]), int_arg(v[1]))); }}},
      {"twovar", {2, "p q", [](const V& v) { return only(two_variable_family(int_arg(v[0]), int_arg(v[1]))); }}},
      {"a9", {2, "l1 l2", [](const V& v) { return only(a9_general(long_arg(v[0]), long_arg(v[1]))); }}},
      {"a9mu", {1, "mu", [](const V& v) { return only(a9_from_mu(rational_arg(v[0]))); }}},
      {"square-cube", {1, "N", [](const V& v) { return square_of(FamilyId::SquareCube, int_arg(v[0])); }}},
      {"square-fib", {1, "N", [](const V& v) { return square_of(FamilyId::SquareFib, int_arg(v[0])); }}},
  };
  return catalog;
}

int cmd_family(const std::string& name, const std::vector<std::string>& params, Context& ctx) {
  const auto& catalog = family_catalog();
  const auto it = catalog.find(name);
  if (it == catalog.end()) {
    ctx.err << "error: unknown family '" << name << "'; known:";
    for (const auto& [k, spec] : catalog) ctx.err << ' ' << k;
    ctx.err << '\n';
    return kUsage;
  }
  if (params.size() != it->second.arity) {
    ctx.err << "error: family " << name << " takes " << it->second.arity << " parameter(s): " << it->second.usage
            << '\n';
    return kUsage;
  }
  std::vector<FamilySolution> sols;
  try {
    sols = it->second.make(params);
  } catch (const ExcludedParameters& e) {
    ctx.err << "error: excluded parameters: " << e.what() << '\n';
    return kExcluded;
  } catch (const NonCanonicalParameters& e) {
    ctx.err << "error: " << e.what();
    if (auto c = e.canonical()) ctx.err << "; canonical pair is (" << c->first << ", " << c->second << ")";
    ctx.err << '\n';
    return kExcluded;
  }
  const FamilySolution& s = sols.front();
  OutputRecord r;
  r.command = "family";
  r.inputs = {{"family", name}, {"params", params}};
  json ps = json::array();
  for (const auto& p : s.params) ps.push_back(p.to_string());
  r.result = {{"family", std::string(family_name(s.family))},
              {"params", ps},
              {"a", s.a.to_string()},
              {"raw", triple_json(s.raw)},
              {"primitive", triple_json(s.primitive.triple)},
              {"is_primitive", is_primitive(s.a, s.primitive.triple)}};
  ctx.out << render(r, ctx.format);
  return kOk;
}

// table

int cmd_table(int which, std::int64_t height, Context& ctx) {
  OutputRecord r;
  r.command = "table";
  r.inputs = {{"which", which}};
  if (which == 1) {
    const SearchResult res = enumerate_primitive({Coefficient(9), 200, ctx.jobs, false});
    json rows = json::array();
    for (const auto& c : res.primitives) {
      const auto l = a9_parameters(c.triple);
      rows.push_back({{"triple", triple_json(c.triple)},
                      {"l1", l ? json(l->first) : json()},
                      {"l2", l ? json(l->second) : json()}});
    }
    r.result = {{"height", 200}, {"rows", rows}};
    r.notes.push_back("exhaustive search for a = 9, x <= 200; labels from the a = 9 general solution");
  } else if (which == 2) {
    r.inputs["height"] = height;
    json rows = json::array();
    for (long k = 1; k <= 10; ++k) {
      for (long a_int : {k, -k}) {
        const Coefficient a(a_int);
        ClassifyOptions o;
        o.search_height = height;
        o.use_curated = true;
        o.parallelism = ctx.jobs;
        const Verdict v = classify(a, o);
        const json vj = verdict_json(v);
        const auto entry = curated_evidence(a);
        const SearchResult found = enumerate_primitive({a, height, ctx.jobs, false});
        json sols = json::array();
        if (entry) {
          for (const auto& t : entry->solutions) {
            const bool prim = is_primitive(a, t);
            const bool disc = prim && std::find(found.primitives.begin(), found.primitives.end(), canonicalize(t)) !=
                                          found.primitives.end();
            sols.push_back({{"triple", triple_json(t)}, {"primitive", prim}, {"discovered", disc}});
          }
        }
        json row{{"a", a.to_string()},
                 {"verdict", vj.at("verdict")},
                 {"basis", vj.contains("reason") ? vj.at("reason") : vj.value("source", json("-"))},
                 {"witness", vj.value("witness", json())},
                 {"count", entry ? json(entry->count) : json()},
                 {"evidence", entry ? json(entry->evidence) : json()},
                 {"solutions", sols}};
        rows.push_back(std::move(row));
      }
    }
    r.result = {{"rows", rows}};
    r.notes.push_back("verdict, basis, witness and solution status are computed here (status: discovered by search at height " +
                      std::to_string(height) + " or verified by substitution); count and evidence are transcribed");
  } else {
    ctx.err << "error: table must be 1 or 2\n";
    return kUsage;
  }
  ctx.out << render(r, ctx.format);
  return kOk;
}

// scan-n

int cmd_scan_n(long n_max, std::int64_t height, std::int64_t covering_bound, Context& ctx) {
  const auto entries = n_sequence_scan(n_max, height, covering_bound, ctx.jobs);
  OutputRecord r;
  r.command = "scan-n";
  r.inputs = {{"max", n_max}, {"height", height}, {"covering_bound", covering_bound}};
  json rows = json::array();
  for (const auto& e : entries)
    rows.push_back({{"n", e.n},
                    {"witness", e.witness ? triple_json(e.witness->triple) : json()},
                    {"source", e.source.empty() ? json() : json(e.source)}});
  r.result = {{"rows", rows}};
  r.notes.push_back("a missing witness is not evidence of non-membership");
  ctx.out << render(r, ctx.format);
  return kOk;
}

// ec

json point_json(const WeierstrassCurve& curve, const Coefficient& a, const CurvePoint& p) {
  json j{{"x", p.x().to_string()}, {"y", p.y().to_string()}};
  const auto ord = point_order(curve, p);
  j["order"] = ord ? json(*ord) : json();
  const Triple t = point_to_triple(curve, p);
  j["triple"] = triple_json(t);
  j["canonical"] = t.is_zero() ? json() : triple_json(canonicalize(t).triple);
  j["primitive"] = is_primitive(a, t);
  return j;
}

int cmd_ec(const std::string& a_text, std::int64_t bound, Context& ctx) {
  const Coefficient a = parse_coefficient(a_text);
  if (a.is_zero()) {
    ctx.err << "error: a = 0 is excluded\n";
    return kZeroCoefficient;
  }
  const WeierstrassCurve curve = reduced_model(to_weierstrass(a));
  OutputRecord r;
  r.command = "ec";
  r.inputs = {{"a", a.to_string()}, {"bound", bound}};
  r.result = {{"A", integer_json(curve.A)},
              {"B", integer_json(curve.B)},
              {"scale", integer_json(curve.scale)},
              {"discriminant", integer_json(curve.discriminant)},
              {"singular", curve.singular()}};
  if (!curve.singular()) {
    const TorsionReport tr = torsion(curve);
    json tors = json::array(), gens = json::array(), pts = json::array();
    for (const auto& p : tr.elements)
      if (!p.is_infinity()) tors.push_back(point_json(curve, a, p));
    for (const auto& p : tr.generators) gens.push_back({{"x", p.x().to_string()}, {"y", p.y().to_string()}});
    for (const auto& p : integer_point_search(curve, bound, ctx.jobs)) pts.push_back(point_json(curve, a, p));
    r.result["torsion_order"] = tr.order;
    r.result["torsion"] = tors;
    r.result["generators"] = gens;
    r.result["integer_points"] = pts;
    r.notes.push_back("coordinates refer to the rescaled curve Y^2 = X^3 + AX + B with X0 = scale^2 X, Y0 = scale^3 Y");
  } else {
    r.notes.push_back("singular curve: no group law");
  }
  ctx.out << render(r, ctx.format);
  return kOk;
}

// search

int cmd_search(const std::string& a_text, std::int64_t height, Context& ctx) {
  const Coefficient a = parse_coefficient(a_text);
  if (a.is_zero()) {
    ctx.err << "error: a = 0 is excluded\n";
    return kZeroCoefficient;
  }
  const SearchResult res = enumerate_primitive({a, height, ctx.jobs, false});
  OutputRecord r;
  r.command = "search";
  r.inputs = {{"a", a.to_string()}, {"height", height}};
  r.result = {{"height", res.height}, {"count", res.primitives.size()}, {"primitives", canonical_list(res.primitives)}};
  ctx.out << render(r, ctx.format);
  return kOk;
}

// oracle

int cmd_oracle(const std::vector<std::string>& params, Context& ctx) {
  if (params.empty()) {
    ctx.err << "error: oracle needs a name: lemma31 <bound> | thue <c> <bound>\n";
    return kUsage;
  }
  OutputRecord r;
  r.command = "oracle";
  json sols = json::array();
  if (params[0] == "lemma31" && params.size() == 2) {
    const long bound = long_arg(params[1]);
    for (const auto& [q, rr, t] : oracle_lemma31(bound)) sols.push_back({q, rr, t});
    r.inputs = {{"name", "lemma31"}, {"bound", bound}};
    r.notes.push_back("coprime (q, r, t) with qrt != 0 and q^4 - r^4 + q^2 r^2 = t^2");
  } else if (params[0] == "thue" && params.size() == 3) {
    const long c = long_arg(params[1]);
    const long bound = long_arg(params[2]);
    for (const auto& [x, y] : oracle_thue(c, bound)) sols.push_back({x, y});
    r.inputs = {{"name", "thue"}, {"c", c}, {"bound", bound}};
    r.notes.push_back("(x, y) with x^3 + 2y^3 = c");
  } else {
    ctx.err << "error: usage: oracle lemma31 <bound> | oracle thue <c> <bound>\n";
    return kUsage;
  }
  r.result = {{"solutions", sols}};
  ctx.out << render(r, ctx.format);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive solutions of a(x^3 + y^3 + z^3) = (x + y + z)^3"};
  app.name("cubesum");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  bool as_json = false, as_tsv = false;
  unsigned jobs = 1;
  app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--tsv", as_tsv, "tab-separated output (default)");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  ClassifyArgs cargs;
  auto* classify_cmd = app.add_subcommand("classify", "verdict for a coefficient");
  classify_cmd->add_option("a", cargs.a, "coefficient, int or num/den")->required();
  classify_cmd->add_option("--height", cargs.height, "search height")->capture_default_str();
  classify_cmd->add_option("--covering-bound", cargs.covering_bound, "covering search bound")->capture_default_str();
  classify_cmd->add_flag("--use-curated", cargs.use_curated, "consult transcribed evidence");
  classify_cmd->add_option("--curated-file", cargs.curated_file, "curated evidence file replacing the builtin table");
  classify_cmd->add_flag("--cache-only", cargs.cache_only, "replay the cached verdict");
  classify_cmd->add_flag("--no-cache", cargs.no_cache, "do not record the result");
  classify_cmd->add_option("--cache-file", cargs.cache_file, "cache path (default $CUBESUM_CACHE)");

  std::string fam_name;
  std::vector<std::string> fam_params;
  auto* family_cmd = app.add_subcommand("family", "evaluate a parametric family");
  family_cmd->add_option("name", fam_name, "family name")->required();
  family_cmd->add_option("params", fam_params, "parameters");

  int which = 0;
  std::int64_t table_height = 200;
  auto* table_cmd = app.add_subcommand("table", "reproduce table 1 or 2");
  table_cmd->add_option("which", which, "1 or 2")->required();
  table_cmd->add_option("--height", table_height, "search height for table 2")->capture_default_str();

  long n_max = 25;
  std::int64_t scan_height = 300, scan_cover = 450;
  auto* scan_cmd = app.add_subcommand("scan-n", "witnesses for a = N^2");
  scan_cmd->add_option("--max", n_max, "largest N")->capture_default_str();
  scan_cmd->add_option("--height", scan_height, "search height")->capture_default_str();
  scan_cmd->add_option("--covering-bound", scan_cover, "covering search bound, 0 to skip")->capture_default_str();

  std::string ec_a;
  std::int64_t ec_bound = 100;
  auto* ec_cmd = app.add_subcommand("ec", "elliptic model, torsion and integer points");
  ec_cmd->add_option("a", ec_a, "coefficient")->required();
  ec_cmd->add_option("--bound", ec_bound, "integer point bound on |X|")->capture_default_str();

  std::string search_a;
  std::int64_t search_height = 100;
  auto* search_cmd = app.add_subcommand("search", "bounded exhaustive search");
  search_cmd->add_option("a", search_a, "coefficient")->required();
  search_cmd->add_option("--height", search_height, "maximum |coordinate|")->capture_default_str();

  std::vector<std::string> oracle_params;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force oracles: lemma31 <bound> | thue <c> <bound>");
  oracle_cmd->add_option("params", oracle_params, "oracle name and parameters")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(kVersion) + "\n" : app.help());
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Context ctx{as_json ? Format::Json : Format::Tsv, jobs, out, err};
  try {
    if (*classify_cmd) return cmd_classify(cargs, ctx);
    if (*family_cmd) return cmd_family(fam_name, fam_params, ctx);
    if (*table_cmd) return cmd_table(which, table_height, ctx);
    if (*scan_cmd) return cmd_scan_n(n_max, scan_height, scan_cover, ctx);
    if (*ec_cmd) return cmd_ec(ec_a, ec_bound, ctx);
    if (*search_cmd) return cmd_search(search_a, search_height, ctx);
    if (*oracle_cmd) return cmd_oracle(oracle_params, ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidCoefficient& e) {
    err << "error: " << e.what() << '\n';
    return kZeroCoefficient;
  } catch (const PreconditionViolated& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace cubesum::cli
