// gforge: construct, decompose, verify and search edge colorings of
// complete graphs. Machine-readable JSON goes to stdout, human summaries
// to stderr. Exit codes: 0 ok / property holds, 1 witness found,
// 2 bad arguments or malformed input, 3 search budget exhausted.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "gforge/constructions.hpp"
#include "gforge/cycles.hpp"
#include "gforge/gallai.hpp"
#include "gforge/json_io.hpp"
#include "gforge/search.hpp"

namespace {

using gforge::EdgeColoring;
using nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xF];
  }
  return out;
}

struct ManifestInfo {
  std::string command_line;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
};

void write_manifest(const ManifestInfo& info, const std::string& path) {
  ordered_json j;
  j["format"] = "run-manifest-v1";
  j["command"] = info.command_line;
  if (info.seed)
    j["seed"] = *info.seed;
  else
    j["seed"] = nullptr;
  j["version"] = kVersion;
  ordered_json digests = ordered_json::object();
  for (const auto& out : info.outputs) digests[out] = sha256_file(out);
  j["output_digests"] = digests;
  j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - info.t0)
                        .count();
  gforge::save_json(j, path);
}

void emit_coloring(const EdgeColoring& g, const std::string& out_path,
                   ManifestInfo& info, const std::string& summary) {
  const ordered_json j = gforge::coloring_to_json(g);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    gforge::save_json(j, out_path);
    info.outputs.push_back(out_path);
  }
  std::cerr << "m=" << g.vertex_count() << " k=" << g.color_count() << " "
            << summary << "\n";
}

std::string join_args(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 0; i < argc; ++i) os << (i ? " " : "") << argv[i];
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gallai coloring construction, decomposition and search"};
  app.require_subcommand(1);

  ManifestInfo manifest;
  manifest.command_line = join_args(argc, argv);
  std::string manifest_path;

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a coloring");
  gen->require_subcommand(1);
  std::string gen_out;
  int gen_n = 4, gen_k = 1, gen_m = 1, gen_color = 1;
  std::uint64_t gen_seed = 0;
  bool seed_given = false;

  auto* gen_efrs = gen->add_subcommand("efrs", "recursive two-copy-join witness");
  gen_efrs->add_option("--n", gen_n, "half-length of the target odd cycle")->required();
  gen_efrs->add_option("--k", gen_k, "number of colors")->required();
  gen_efrs->add_option("-o,--out", gen_out, "output file (default: stdout)");
  gen_efrs->add_option("--manifest", manifest_path, "write a run manifest");

  auto* gen_two = gen->add_subcommand("two-color", "red/blue witness on 4n vertices");
  gen_two->add_option("--n", gen_n)->required();
  gen_two->add_option("-o,--out", gen_out);
  gen_two->add_option("--manifest", manifest_path);

  auto* gen_rand = gen->add_subcommand("random-gallai", "random rainbow-free coloring");
  gen_rand->add_option("--m", gen_m)->required();
  gen_rand->add_option("--k", gen_k)->required();
  auto* seed_opt = gen_rand->add_option("--seed", gen_seed, "RNG seed");
  gen_rand->add_option("-o,--out", gen_out);
  gen_rand->add_option("--manifest", manifest_path);

  auto* gen_uni = gen->add_subcommand("uniform", "single-color coloring");
  gen_uni->add_option("--m", gen_m)->required();
  gen_uni->add_option("--k", gen_k)->required();
  gen_uni->add_option("--color", gen_color)->required();
  gen_uni->add_option("-o,--out", gen_out);
  gen_uni->add_option("--manifest", manifest_path);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "check a coloring file for a "
                                              "monochromatic cycle");
  std::string verify_path;
  int verify_L = 0;
  bool verify_gallai = false;
  verify->add_option("coloring", verify_path, "coloring JSON file")->required();
  verify->add_option("--cycle", verify_L, "cycle length to look for")->required();
  verify->add_flag("--gallai", verify_gallai, "also reject rainbow triangles");

  // ---- partition ----
  auto* partition = app.add_subcommand("partition", "compute a Gallai partition "
                                                    "and the reduced coloring");
  std::string part_in, part_out, part_reduced;
  partition->add_option("coloring", part_in)->required();
  partition->add_option("out", part_out, "partition JSON output")->required();
  partition->add_option("--reduced", part_reduced,
                        "reduced coloring output (default: <out>.reduced.json)");

  // ---- search ----
  auto* search = app.add_subcommand("search", "exhaustive upper-bound search");
  gforge::SearchProblem pb{};
  int jobs = 1;
  std::string search_out, cex_out;
  search->add_option("--m", pb.m)->required();
  search->add_option("--cycle", pb.L)->required();
  search->add_option("--colors", pb.k)->required();
  search->add_flag("--gallai", pb.gallai_only, "restrict to Gallai colorings");
  search->add_option("--budget-nodes", pb.budget.max_nodes, "node limit per subtree");
  search->add_option("--budget-ms", pb.budget.wall_ms, "wall clock limit");
  search->add_option("--jobs", jobs, "worker threads");
  search->add_option("-o,--out", search_out, "report JSON file (default: stdout)");
  search->add_option("--counterexample-out", cex_out,
                     "write any counterexample coloring here");
  search->add_option("--manifest", manifest_path);

  // ---- bounds ----
  auto* bounds = app.add_subcommand("bounds", "lower/upper bound formulas");
  int b_n = 0, b_k = 0;
  bounds->add_option("--n", b_n)->required();
  bounds->add_option("--k", b_k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen_efrs->parsed()) {
      emit_coloring(gforge::efrs_witness({gen_n, gen_k}), gen_out, manifest,
                    "efrs witness, " + std::to_string(gen_n) + "*2^" +
                        std::to_string(gen_k) + " vertices");
    } else if (gen_two->parsed()) {
      emit_coloring(gforge::two_color_cycle_witness(gen_n), gen_out, manifest,
                    "two-color witness on 4n vertices");
    } else if (gen_rand->parsed()) {
      seed_given = seed_opt->count() > 0;
      if (!seed_given) {
        if (const char* env = std::getenv("GFORGE_SEED"))
          gen_seed = std::strtoull(env, nullptr, 10);
      }
      manifest.seed = gen_seed;
      emit_coloring(gforge::random_gallai(gen_m, gen_k, gen_seed), gen_out,
                    manifest, "random Gallai coloring, seed " +
                                  std::to_string(gen_seed));
    } else if (gen_uni->parsed()) {
      emit_coloring(EdgeColoring::uniform(gen_m, gen_k, gen_color), gen_out,
                    manifest, "uniform coloring in color " +
                                  std::to_string(gen_color));
    } else if (verify->parsed()) {
      const EdgeColoring g = gforge::load_coloring(verify_path);
      if (verify_gallai) {
        if (auto t = gforge::find_rainbow_triangle(g)) {
          ordered_json j;
          j["rainbow_triangle"] = {(*t)[0], (*t)[1], (*t)[2]};
          std::cout << j.dump(2) << "\n";
          std::cerr << "rainbow triangle found\n";
          return 1;
        }
      }
      if (auto hit = gforge::find_monochromatic_cycle(g, verify_L)) {
        std::cout << gforge::witness_to_json(hit->second).dump(2) << "\n";
        std::cerr << "monochromatic C_" << verify_L << " in color " << hit->first
                  << "\n";
        return 1;
      }
      std::cerr << "no monochromatic C_" << verify_L
                << (verify_gallai ? ", no rainbow triangle" : "") << "\n";
      return 0;
    } else if (partition->parsed()) {
      const EdgeColoring g = gforge::load_coloring(part_in);
      gforge::GallaiPartition P;
      try {
        P = gforge::gallai_partition(g);
      } catch (const gforge::RainbowTriangleError& e) {
        ordered_json j;
        j["rainbow_triangle"] = {e.triangle[0], e.triangle[1], e.triangle[2]};
        std::cout << j.dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return 1;
      }
      gforge::save_json(gforge::partition_to_json(P), part_out);
      if (part_reduced.empty()) part_reduced = part_out + ".reduced.json";
      gforge::save_json(gforge::coloring_to_json(gforge::reduced_coloring(g, P)),
                        part_reduced);
      std::cerr << "p=" << P.part_count() << " parts, "
                << P.between_colors.size() << " between-color(s)\n";
      return 0;
    } else if (search->parsed()) {
      const gforge::SearchReport rep = gforge::verify_upper(pb, jobs);
      const ordered_json j = gforge::report_to_json(rep);
      if (search_out.empty()) {
        std::cout << j.dump(2) << "\n";
      } else {
        gforge::save_json(j, search_out);
        manifest.outputs.push_back(search_out);
      }
      if (rep.counterexample && !cex_out.empty()) {
        gforge::save_json(gforge::coloring_to_json(*rep.counterexample), cex_out);
        manifest.outputs.push_back(cex_out);
      }
      std::cerr << "nodes=" << rep.nodes << " elapsed_ms=" << rep.elapsed_ms
                << "\n";
      if (!manifest_path.empty()) write_manifest(manifest, manifest_path);
      switch (rep.outcome) {
        case gforge::SearchOutcome::Verified: return 0;
        case gforge::SearchOutcome::Counterexample: return 1;
        case gforge::SearchOutcome::BudgetExhausted: return 3;
      }
    } else if (bounds->parsed()) {
      const gforge::GrBounds b = gforge::gr_bounds({b_n, b_k});
      ordered_json j;
      j["n"] = b_n;
      j["k"] = b_k;
      j["lower"] = b.lower;
      j["upper"] = b.upper;
      j["upper_floor"] = static_cast<long long>(b.upper);
      if (b.exact)
        j["exact"] = *b.exact;
      else
        j["exact"] = nullptr;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (!manifest_path.empty()) write_manifest(manifest, manifest_path);
    return 0;
  } catch (const gforge::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
