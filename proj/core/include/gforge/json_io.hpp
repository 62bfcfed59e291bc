#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gforge/coloring.hpp"
#include "gforge/cycles.hpp"
#include "gforge/gallai.hpp"
#include "gforge/search.hpp"

namespace gforge {

/// Malformed or out-of-contract input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wire formats. Readers reject wrong array lengths, out-of-range colors and
// unknown format tags with precise diagnostics.
//   gallai-coloring-v1:  {"format","m","k","colors":[...]} upper-tri row-major
//   gallai-partition-v1: {"format","parts":[[...],...],"pair_colors":[[i,j,c],...]}
//   cycle-witness-v1:    {"format","color":int|null,"vertices":[...]}
//   search-report-v1:    {"format","outcome","nodes","elapsed_ms",
//                         "counterexample","prunes":{...}}

nlohmann::ordered_json coloring_to_json(const EdgeColoring& g);
EdgeColoring coloring_from_json(const nlohmann::json& j);

nlohmann::ordered_json partition_to_json(const GallaiPartition& P);
GallaiPartition partition_from_json(const nlohmann::json& j);

nlohmann::ordered_json witness_to_json(const CycleWitness& w);
CycleWitness witness_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const SearchReport& r);

EdgeColoring load_coloring(const std::filesystem::path& path);
void save_json(const nlohmann::ordered_json& j, const std::filesystem::path& path);

}  // namespace gforge
