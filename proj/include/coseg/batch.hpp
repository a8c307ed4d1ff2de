#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "coseg/document.hpp"
#include "coseg/generators.hpp"
#include "coseg/verifier.hpp"

namespace coseg {

struct BatchConfig {
  int count = 1;
  int n = 10;
  std::uint64_t seed = 0;
  InstanceKind kind = InstanceKind::partial2tree;
  KeepProb keep = KeepProb::make(3, 4);
  unsigned jobs = 1;
};

struct BatchItem {
  int index = 0;
  std::uint64_t seed = 0;
  Graph graph;
  bool ok = false;
  std::string document;  // emitted JSON, empty when the build failed
  std::string message;
  int max_shrink_level = 0;
  std::size_t max_coordinate_bits = 0;
};

// splitmix64 finaliser; spreads (base seed, index) into independent instance seeds.
inline std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// generate -> build -> emit -> parse -> audit for one instance.
inline BatchItem run_instance(const BatchConfig& cfg, int index) {
  BatchItem item;
  item.index = index;
  item.seed = instance_seed(cfg.seed, static_cast<std::uint64_t>(index));
  try {
    item.graph = gen_instance(cfg.kind, cfg.n, cfg.keep, item.seed);
    RepresentationDocument doc = build_document(item.graph, item.seed);
    item.document = emit_json(doc);
    for (int l : doc.meta.shrink_levels) item.max_shrink_level = std::max(item.max_shrink_level, l);
    item.max_coordinate_bits = doc.meta.max_coordinate_bits;
    RepresentationDocument reread = parse_json(item.document);
    AuditReport report = audit_compatibility(reread.rep);
    const Graph ig = intersection_graph(reread.rep.segments);
    const std::size_t n = static_cast<std::size_t>(cfg.n);
    const bool counts = ig.m() == n * (n - 1) / 2 - item.graph.m();
    item.ok = report.ok && counts && ig == complement(item.graph);
    item.message = item.ok ? "ok" : report.summary();
  } catch (const Error& e) {
    item.ok = false;
    item.message = e.what();
  }
  return item;
}

// Results are ordered by instance index whatever the number of workers.
inline std::vector<BatchItem> run_batch(const BatchConfig& cfg) {
  if (cfg.count < 0) throw InvalidArgument("negative batch count");
  if (cfg.n < 2) throw InvalidArgument("batch instances need n >= 2");
  std::vector<BatchItem> items(static_cast<std::size_t>(cfg.count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.count; i = next++) items[static_cast<std::size_t>(i)] = run_instance(cfg, i);
  };
  unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return items;
}

}  // namespace coseg
