// coseg: build and check segment representations of complements of partial 2-trees.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "coseg/coseg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw coseg::InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw coseg::InvalidArgument("cannot write '" + path + "'");
  out << text;
}

int cmd_check(const std::string& file) {
  coseg::Graph g = coseg::parse_edge_list(read_file(file));
  if (g.n() < 2) {
    std::cout << "PARTIAL-2-TREE\nfill 0\n";
    return kExitOk;
  }
  try {
    auto tt = coseg::recognize_and_complete(g);
    std::cout << "PARTIAL-2-TREE\nfill " << tt.fill_edges.size() << '\n';
    for (const auto& e : tt.fill_edges) std::cout << e.u << ' ' << e.v << '\n';
    return kExitOk;
  } catch (const coseg::NotPartialTwoTree&) {
    std::cout << "NOT-PARTIAL-2-TREE\n";
    return kExitNegative;
  }
}

int cmd_build(const std::string& file, const std::string& out) {
  coseg::Graph g = coseg::parse_edge_list(read_file(file));
  try {
    write_output(out, coseg::emit_json(coseg::build_document(g)));
    return kExitOk;
  } catch (const coseg::NotPartialTwoTree&) {
    std::cerr << "NOT-PARTIAL-2-TREE\n";
    return kExitNegative;
  }
}

int cmd_verify(const std::string& file) {
  coseg::RepresentationDocument doc = coseg::parse_json(read_file(file));
  const auto& tt = doc.rep.tt;
  if (tt.original.n() >= 2) {
    try {
      coseg::peel_order(tt.completed);
    } catch (const coseg::MalformedTwoTree& e) {
      std::cout << "FAILED: two_tree_edges do not form a 2-tree (" << e.what() << ")\n";
      return kExitNegative;
    }
  } else if (tt.completed.m() != 0) {
    std::cout << "FAILED: a document on fewer than 2 vertices has no 2-tree edges\n";
    return kExitNegative;
  }
  try {
    coseg::AuditReport report = coseg::audit_compatibility(doc.rep);
    std::cout << report.summary() << '\n';
    return report.ok ? kExitOk : kExitNegative;
  } catch (const coseg::StructuralMismatch& e) {
    std::cout << "FAILED: " << e.what() << '\n';
    return kExitNegative;
  }
}

int cmd_render(const std::string& file, const std::string& out) {
  write_output(out, coseg::render_svg(coseg::parse_json(read_file(file))));
  return kExitOk;
}

int cmd_gen(const std::string& kind, int n, const std::string& keep, std::uint64_t seed, const std::string& out) {
  coseg::Graph g = coseg::gen_instance(coseg::parse_kind(kind), n, coseg::KeepProb::parse(keep), seed);
  write_output(out, coseg::emit_edge_list(g));
  return kExitOk;
}

int cmd_batch(coseg::BatchConfig cfg, const std::string& kind, const std::string& keep, const std::string& out_dir) {
  cfg.kind = coseg::parse_kind(kind);
  cfg.keep = coseg::KeepProb::parse(keep);
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  int failures = 0;
  for (const auto& item : coseg::run_batch(cfg)) {
    std::cout << "instance " << item.index << " seed " << item.seed << " m " << item.graph.m() << " shrink "
              << item.max_shrink_level << " bits " << item.max_coordinate_bits << ' '
              << (item.ok ? "ok" : "FAILED: " + item.message) << '\n';
    if (!item.ok) ++failures;
    if (!out_dir.empty() && !item.document.empty()) {
      std::ostringstream name;
      name << "instance_" << item.index << ".json";
      write_output((std::filesystem::path(out_dir) / name.str()).string(), item.document);
    }
  }
  std::cout << (failures == 0 ? "all " + std::to_string(cfg.count) + " instances verified"
                              : std::to_string(failures) + " of " + std::to_string(cfg.count) + " instances failed")
            << '\n';
  return failures == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segment representations of complements of partial 2-trees"};
  app.require_subcommand(1);

  std::string input, output, kind = "partial2tree", keep = "1", out_dir;
  int n = 10;
  std::uint64_t seed = 0;
  coseg::BatchConfig batch;
  std::string batch_keep = "3/4";

  auto* check = app.add_subcommand("check", "Recognise a partial 2-tree and print its fill edges");
  check->add_option("file", input, "Edge-list file")->required();

  auto* build = app.add_subcommand("build", "Build a certified representation document");
  build->add_option("file", input, "Edge-list file")->required();
  build->add_option("-o,--output", output, "Output JSON (default stdout)");

  auto* verify = app.add_subcommand("verify", "Re-audit a representation document");
  verify->add_option("doc", input, "Representation JSON")->required();

  auto* render = app.add_subcommand("render", "Draw a representation document as SVG");
  render->add_option("doc", input, "Representation JSON")->required();
  render->add_option("-o,--output", output, "Output SVG")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random instance as an edge list");
  gen->add_option("--kind", kind, "partial2tree | outerplanar | seriesparallel");
  gen->add_option("--n", n, "Vertex count")->required();
  gen->add_option("--keep", keep, "Edge survival probability, e.g. 1, 3/4, 0.5");
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  auto* bat = app.add_subcommand("batch", "Generate, build and verify many instances");
  bat->add_option("--count", batch.count, "Number of instances")->required();
  bat->add_option("--n", batch.n, "Vertex count")->required();
  bat->add_option("--seed", batch.seed, "Base seed")->required();
  bat->add_option("--kind", kind, "partial2tree | outerplanar | seriesparallel");
  bat->add_option("--keep", batch_keep, "Edge survival probability");
  bat->add_option("--jobs", batch.jobs, "Worker threads");
  bat->add_option("--out", out_dir, "Directory for the emitted JSON documents");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*check) return cmd_check(input);
    if (*build) return cmd_build(input, output);
    if (*verify) return cmd_verify(input);
    if (*render) return cmd_render(input, output);
    if (*gen) return cmd_gen(kind, n, keep, seed, output);
    if (*bat) return cmd_batch(batch, kind, batch_keep, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
