// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coseg/coseg.hpp"
#include "mutations.hpp"
#include "oracles.hpp"
#include "probes.hpp"

using namespace coseg;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const char* title, const Outcome& o) {
  std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

struct Instance {
  std::string label;
  Graph g;
};

struct InstanceResult {
  bool built = false;
  bool every_step_ok = true;
  bool final_ok = false;
  bool complement_ok = false;
  bool count_ok = false;
  double seconds = 0;
  int max_level = 0;
  std::size_t bits = 0;
  std::string error;
};

std::size_t oracle_intersecting_pairs(const CompatibleRepresentation& rep) {
  std::size_t count = 0;
  for (auto i = rep.segments.begin(); i != rep.segments.end(); ++i)
    for (auto j = std::next(i); j != rep.segments.end(); ++j)
      if (oracle::relate(oracle::piece(i->second), oracle::piece(j->second)) != RelationTag::disjoint) ++count;
  return count;
}

InstanceResult run(const Instance& inst) {
  InstanceResult r;
  const auto t0 = Clock::now();
  try {
    BuildResult res = build(inst.g, [&](const CompatibleRepresentation& rep, std::size_t step) {
      AuditReport a = audit_compatibility(rep, AuditScope::present);
      if (!a.ok) {
        r.every_step_ok = false;
        if (r.error.empty()) r.error = "step " + std::to_string(step) + ": " + a.summary();
      }
    });
    r.seconds = seconds_since(t0);
    r.built = true;
    AuditReport final_report = audit_compatibility(res.rep);
    r.final_ok = final_report.ok;
    if (!r.final_ok && r.error.empty()) r.error = final_report.summary();
    r.complement_ok = intersection_graph(res.rep.segments) == complement(inst.g);
    const std::size_t n = static_cast<std::size_t>(inst.g.n());
    r.count_ok = oracle_intersecting_pairs(res.rep) == n * (n - 1) / 2 - inst.g.m();
    for (int l : res.shrink_levels) r.max_level = std::max(r.max_level, l);
    r.bits = max_coordinate_bits(res.rep);
  } catch (const Error& e) {
    r.seconds = seconds_since(t0);
    r.error = e.what();
  }
  return r;
}

const KeepProb kKeeps[] = {KeepProb::make(1, 1), KeepProb::make(3, 4), KeepProb::make(1, 2)};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

int main() {
  // Instances shared by criteria 1, 2, 3 and 8.
  std::vector<Instance> random_p2t, subclass;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 14;
    const KeepProb keep = kKeeps[i % 3];
    const std::uint64_t seed = instance_seed(20240, static_cast<std::uint64_t>(i));
    random_p2t.push_back({"partial2tree#" + std::to_string(i), gen_instance(InstanceKind::partial2tree, n, keep, seed)});
  }
  for (InstanceKind kind : {InstanceKind::outerplanar, InstanceKind::seriesparallel}) {
    for (int i = 0; i < 50; ++i) {
      const int n = 3 + i % 10;
      const std::uint64_t seed = instance_seed(777, static_cast<std::uint64_t>(i));
      subclass.push_back({std::string(to_string(kind)) + "#" + std::to_string(i),
                           gen_instance(kind, n, kKeeps[i % 3], seed)});
    }
  }

  std::vector<InstanceResult> p2t_results, sub_results;
  for (const auto& inst : random_p2t) p2t_results.push_back(run(inst));
  for (const auto& inst : subclass) sub_results.push_back(run(inst));

  {
    Outcome o;
    double worst = 0;
    for (std::size_t i = 0; i < random_p2t.size(); ++i) {
      const auto& r = p2t_results[i];
      worst = std::max(worst, r.seconds);
      if (!r.built) o.fail(random_p2t[i].label + " build failed: " + r.error);
      else if (!r.every_step_ok) o.fail(random_p2t[i].label + " inductive audit failed: " + r.error);
      else if (!r.final_ok) o.fail(random_p2t[i].label + " final audit failed: " + r.error);
      else if (r.seconds >= 5.0) o.fail(random_p2t[i].label + " took " + fmt("%.2f s", r.seconds));
    }
    if (o.pass) o.detail = "200 instances, n in 2..15, every step audited, slowest " + fmt("%.3f s", worst);
    report(1, "end-to-end construction check", o);
  }
  {
    Outcome o;
    for (std::size_t i = 0; i < random_p2t.size(); ++i) {
      const auto& r = p2t_results[i];
      if (!r.built) o.fail(random_p2t[i].label + " not built");
      else if (!r.complement_ok) o.fail(random_p2t[i].label + " intersection graph differs from the complement");
      else if (!r.count_ok) o.fail(random_p2t[i].label + " intersecting-pair count differs from n(n-1)/2 - m");
    }
    if (o.pass) o.detail = "intersection graph equals the complement on all 200 instances";
    report(2, "complement soundness", o);
  }
  {
    Outcome o;
    for (std::size_t i = 0; i < subclass.size(); ++i) {
      const auto& r = sub_results[i];
      if (!(r.built && r.every_step_ok && r.final_ok && r.complement_ok && r.count_ok && r.seconds < 5.0))
        o.fail(subclass[i].label + " failed: " + (r.error.empty() ? "complement or timing" : r.error));
    }
    if (o.pass) o.detail = "50 outerplanar and 50 series-parallel instances, n in 3..12";
    report(3, "outerplanar and series-parallel coverage", o);
  }
  {
    Outcome o;
    std::size_t graphs = 0, accepted = 0;
    for (int n = 2; n <= 6 && o.pass; ++n) {
      const int pairs = n * (n - 1) / 2;
      for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        Graph g = oracle::graph_from_mask(n, mask);
        ++graphs;
        bool ok = true;
        try {
          TwoTreeCompletion tt = recognize_and_complete(g);
          ++accepted;
          Graph replayed = replay(n, peel_order(tt));
          if (replayed != tt.completed || replayed.m() != static_cast<std::size_t>(2 * n - 3)) {
            o.fail("completion of n=" + std::to_string(n) + " mask=" + std::to_string(mask) + " does not replay");
            break;
          }
          for (const Edge& e : g.edges())
            if (!tt.completed.has_edge(e)) o.fail("completion drops an edge");
        } catch (const NotPartialTwoTree&) {
          ok = false;
        }
        if (ok != oracle::treewidth_at_most_2(g)) {
          o.fail("disagrees with the oracle on n=" + std::to_string(n) + " mask=" + std::to_string(mask));
          break;
        }
      }
    }
    auto rejected = [](const Graph& g) {
      try {
        recognize_and_complete(g);
        return false;
      } catch (const NotPartialTwoTree&) {
        return true;
      }
    };
    Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Graph wheel = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
    if (!rejected(k4)) o.fail("K4 accepted");
    if (!rejected(wheel)) o.fail("5-wheel accepted");
    if (o.pass)
      o.detail = std::to_string(graphs) + " graphs on n <= 6, " + std::to_string(accepted) +
                 " accepted, all agree with the oracle; K4 and the 5-wheel rejected";
    report(4, "recognition correctness", o);
  }
  {
    Outcome o;
    for (const auto& m : mutations::golden()) {
      AuditReport a = audit_compatibility(m.rep);
      auto failed = a.failures();
      bool exact = m.clause ? (failed.size() == 1 && failed[0].clause == *m.clause && failed[0].edge == m.ray &&
                               a.complement_ok)
                            : (failed.empty() && !a.complement_ok);
      if (a.ok || !exact) o.fail(m.name + ": " + a.summary());
    }
    if (o.pass) o.detail = "5 fixtures, each fails exactly its intended clause";
    report(5, "clause sensitivity", o);
  }
  {
    Outcome o;
    Rng rng(99);
    int probes = 0;
    for (std::uint64_t seed = 1; probes < 1000 && o.pass; ++seed) {
      Graph g = gen_instance(InstanceKind::partial2tree, 8 + static_cast<int>(seed % 5), kKeeps[seed % 3], seed);
      BuildResult res = build(g);
      for (const auto& [edge, r] : res.rep.special_rays) {
        auto strip = probes::any_strip(res.rep, edge);
        if (!strip) {
          o.fail("no strip around a special ray");
          break;
        }
        for (int k = 0; k < 4 && probes < 1000; ++k, ++probes) {
          auto missed = probes::missed(res.rep, *strip, probes::random_probe(*strip, rng));
          if (!missed.empty()) o.fail("probe misses " + missed.front());
        }
      }
    }
    if (o.pass) o.detail = std::to_string(probes) + " probes cross every object their special ray crosses";
    report(6, "strip crossing property", o);
  }
  {
    Outcome o;
    Rng rng(4242);
    auto coord = [&] { return Rational(static_cast<long>(rng.below(9)) - 4); };
    auto point = [&] { return Point{coord(), coord()}; };
    const auto t0 = Clock::now();
    int queries = 0;
    std::map<RelationTag, int> seen;
    while (queries < 100000) {
      Point a = point(), b = point(), c = point(), d = point();
      if (a == b || c == d) continue;
      RelationTag got, want;
      switch (queries % 3) {
        case 0:
          got = seg_seg(Segment(a, b), Segment(c, d)).tag;
          want = oracle::relate(oracle::piece(Segment(a, b)), oracle::piece(Segment(c, d)));
          break;
        case 1:
          got = ray_seg(Ray(a, b), Segment(c, d)).tag;
          want = oracle::relate(oracle::piece(Ray(a, b)), oracle::piece(Segment(c, d)));
          break;
        default:
          got = ray_ray(Ray(a, b), Ray(c, d)).tag;
          want = oracle::relate(oracle::piece(Ray(a, b)), oracle::piece(Ray(c, d)));
      }
      ++seen[got];
      if (got != want) {
        std::ostringstream os;
        os << "query " << queries << " disagrees: " << a << b << c << d;
        o.fail(os.str());
        break;
      }
      ++queries;
    }
    const double elapsed = seconds_since(t0);
    if (o.pass && elapsed >= 10.0) o.fail("took " + fmt("%.2f s", elapsed));
    if (o.pass)
      o.detail = "100000 queries in " + fmt("%.2f s", elapsed) + " (cross " + std::to_string(seen[RelationTag::cross]) +
                 ", touch " + std::to_string(seen[RelationTag::touch]) + ", overlap " +
                 std::to_string(seen[RelationTag::overlap]) + ", disjoint " +
                 std::to_string(seen[RelationTag::disjoint]) + ")";
    report(7, "exact-geometry oracle agreement", o);
  }
  {
    Outcome o;
    int worst = 0;
    std::map<int, std::size_t> bits_per_n;
    auto absorb = [&](const std::vector<Instance>& insts, const std::vector<InstanceResult>& results) {
      for (std::size_t i = 0; i < insts.size(); ++i) {
        if (!results[i].built) continue;
        worst = std::max(worst, results[i].max_level);
        auto& b = bits_per_n[insts[i].g.n()];
        b = std::max(b, results[i].bits);
      }
    };
    absorb(random_p2t, p2t_results);
    absorb(subclass, sub_results);
    std::string table;
    for (const auto& [n, b] : bits_per_n) table += " n=" + std::to_string(n) + ":" + std::to_string(b);
    if (worst > 8) o.fail("max shrink level " + std::to_string(worst));
    o.detail = "max shrink level " + std::to_string(worst) + "; max coordinate bits" + table;
    report(8, "robustness and metrics", o);
  }
  {
    Outcome o;
    BatchConfig cfg;
    cfg.count = 20;
    cfg.n = 10;
    cfg.seed = 1;
    auto first = run_batch(cfg);
    auto second = run_batch(cfg);
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (!first[i].ok) o.fail("instance " + std::to_string(i) + " failed: " + first[i].message);
      else if (first[i].document != second[i].document) o.fail("instance " + std::to_string(i) + " differs");
    }
    if (o.pass) o.detail = "two runs of 20 instances (n=10, seed 1) are byte-identical";
    report(9, "determinism", o);
  }
  return failures == 0 ? 0 : 1;
}
