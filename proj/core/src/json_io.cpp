#include "gforge/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace gforge {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require(bool ok, const std::string& what) {
  if (!ok) throw FormatError(what);
}

const json& field(const json& j, const char* name) {
  require(j.is_object(), "expected a JSON object");
  auto it = j.find(name);
  require(it != j.end(), std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& f = field(j, name);
  require(f.is_number_integer(), std::string("field \"") + name +
                                     "\" must be an integer");
  return f.get<int>();
}

void check_format(const json& j, const char* tag) {
  const json& f = field(j, "format");
  require(f.is_string() && f.get<std::string>() == tag,
          std::string("expected format \"") + tag + "\"");
}

}  // namespace

ordered_json coloring_to_json(const EdgeColoring& g) {
  ordered_json j;
  j["format"] = "gallai-coloring-v1";
  j["m"] = g.vertex_count();
  j["k"] = g.color_count();
  j["colors"] = g.colors();
  return j;
}

EdgeColoring coloring_from_json(const json& j) {
  check_format(j, "gallai-coloring-v1");
  const int m = int_field(j, "m");
  const int k = int_field(j, "k");
  require(m >= 1, "m must be >= 1");
  require(k >= 1, "k must be >= 1");
  const json& arr = field(j, "colors");
  require(arr.is_array(), "\"colors\" must be an array");
  require(arr.size() == EdgeColoring::pair_count(m),
          "\"colors\" has " + std::to_string(arr.size()) + " entries, expected " +
              std::to_string(EdgeColoring::pair_count(m)));
  std::vector<ColorId> colors;
  colors.reserve(arr.size());
  for (const json& e : arr) {
    require(e.is_number_integer(), "\"colors\" entries must be integers");
    const int c = e.get<int>();
    require(c >= 1 && c <= k, "color " + std::to_string(c) + " out of range [1," +
                                  std::to_string(k) + "]");
    colors.push_back(c);
  }
  return EdgeColoring(m, k, std::move(colors));
}

ordered_json partition_to_json(const GallaiPartition& P) {
  ordered_json j;
  j["format"] = "gallai-partition-v1";
  j["parts"] = P.parts;
  ordered_json pc = ordered_json::array();
  const int p = P.part_count();
  for (int i = 0; i < p; ++i)
    for (int jj = i + 1; jj < p; ++jj)
      pc.push_back({i, jj, P.pair_color_at(i, jj)});
  j["pair_colors"] = pc;
  return j;
}

GallaiPartition partition_from_json(const json& j) {
  check_format(j, "gallai-partition-v1");
  GallaiPartition P;
  const json& parts = field(j, "parts");
  require(parts.is_array(), "\"parts\" must be an array");
  for (const json& part : parts) {
    require(part.is_array(), "each part must be an array of vertices");
    P.parts.push_back(part.get<std::vector<int>>());
  }
  const int p = P.part_count();
  P.pair_color.assign(EdgeColoring::pair_count(p), 0);
  const json& pc = field(j, "pair_colors");
  require(pc.is_array(), "\"pair_colors\" must be an array");
  require(pc.size() == EdgeColoring::pair_count(p),
          "\"pair_colors\" must list every part pair once");
  for (const json& e : pc) {
    require(e.is_array() && e.size() == 3, "pair_colors entries must be [i,j,c]");
    const int a = e[0].get<int>(), b = e[1].get<int>(), c = e[2].get<int>();
    require(a >= 0 && a < p && b >= 0 && b < p && a != b,
            "pair_colors part indices out of range");
    P.pair_color[EdgeColoring::pair_index(a, b, p)] = c;
    if (std::find(P.between_colors.begin(), P.between_colors.end(), c) ==
        P.between_colors.end())
      P.between_colors.push_back(c);
  }
  std::sort(P.between_colors.begin(), P.between_colors.end());
  return P;
}

ordered_json witness_to_json(const CycleWitness& w) {
  ordered_json j;
  j["format"] = "cycle-witness-v1";
  if (w.color)
    j["color"] = *w.color;
  else
    j["color"] = nullptr;
  j["vertices"] = w.vertices;
  return j;
}

CycleWitness witness_from_json(const json& j) {
  check_format(j, "cycle-witness-v1");
  CycleWitness w;
  const json& c = field(j, "color");
  if (!c.is_null()) {
    require(c.is_number_integer(), "\"color\" must be an integer or null");
    w.color = c.get<int>();
  }
  const json& verts = field(j, "vertices");
  require(verts.is_array(), "\"vertices\" must be an array");
  w.vertices = verts.get<std::vector<int>>();
  return w;
}

ordered_json report_to_json(const SearchReport& r) {
  ordered_json j;
  j["format"] = "search-report-v1";
  switch (r.outcome) {
    case SearchOutcome::Verified: j["outcome"] = "verified"; break;
    case SearchOutcome::Counterexample: j["outcome"] = "counterexample"; break;
    case SearchOutcome::BudgetExhausted: j["outcome"] = "budget"; break;
  }
  j["nodes"] = r.nodes;
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.counterexample)
    j["counterexample"] = coloring_to_json(*r.counterexample);
  else
    j["counterexample"] = nullptr;
  j["prunes"] = {{"cycle", r.prunes.cycle},
                 {"rainbow", r.prunes.rainbow},
                 {"symmetry", r.prunes.symmetry}};
  j["deterministic"] = r.deterministic;
  return j;
}

EdgeColoring load_coloring(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return coloring_from_json(j);
}

void save_json(const ordered_json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace gforge
