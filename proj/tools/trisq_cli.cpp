// Command-line front end. Talks to the library through the C interface only.

#include "trisq/trisq.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(trisq_status s) { return s == TRISQ_PROPERTY_VIOLATION ? kExitViolation : kExitUsage; }

void check(trisq_status s, const std::string& context) {
  if (s != TRISQ_OK)
    throw Failure{exit_code_for(s), context + ": " + trisq_status_name(s) + ": " + trisq_last_error()};
}

// Owns a string handed out by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  trisq_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<trisq_graph, Deleter<trisq_graph, trisq_graph_free>>;
using ExtremePtr = std::unique_ptr<trisq_extreme, Deleter<trisq_extreme, trisq_extreme_free>>;
using BlueprintPtr = std::unique_ptr<trisq_blueprint, Deleter<trisq_blueprint, trisq_blueprint_free>>;
using ReportPtr = std::unique_ptr<trisq_report, Deleter<trisq_report, trisq_report_free>>;
using BatchPtr = std::unique_ptr<trisq_batch, Deleter<trisq_batch, trisq_batch_free>>;

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitUsage, "cannot open '" + path + "' for writing"};
  out << content;
  if (!content.empty() && content.back() != '\n') out << '\n';
  if (!out) throw Failure{kExitUsage, "failed writing '" + path + "'"};
}

std::string frac(const json& q) {
  const auto num = q.at("num").get<std::string>();
  const auto den = q.at("den").get<std::string>();
  return den == "1" ? num : num + "/" + den;
}

std::string point(const json& p) { return "(" + frac(p.at("x")) + ", " + frac(p.at("y")) + ")"; }

// -- polygon ------------------------------------------------------------------

struct PolygonArgs {
  unsigned r = 3;
  bool json_out = false;
  bool scaled = false;
  std::string svg;
  std::string bounds;
  std::vector<std::string> locate;
};

int run_polygon(const PolygonArgs& a) {
  char* raw = nullptr;
  check(trisq_polygon_json(a.r, a.scaled, &raw), "polygon");
  const std::string text = take(raw);
  if (a.json_out) {
    std::cout << text << '\n';
  } else {
    const json doc = json::parse(text);
    std::cout << (a.scaled ? "scaled Q^" : "Q^") << a.r << ": " << doc["vertex_count"].get<std::size_t>() << " vertices\n";
    for (std::size_t i = 0; i < doc["vertices"].size(); ++i)
      std::cout << "  " << point(doc["vertices"][i]) << "  C^" << a.r << "_" << doc["levels"][i].get<unsigned>() << '\n';
  }
  if (!a.svg.empty()) {
    check(trisq_polygon_svg(a.r, a.scaled, &raw), "polygon svg");
    write_output(a.svg, take(raw));
  }
  if (!a.bounds.empty()) {
    check(trisq_polygon_bounds(a.r, a.bounds.c_str(), &raw), "bounds");
    const json b = json::parse(take(raw));
    std::cout << "bounds at d3 = " << a.bounds << ": " << frac(b["lower"]) << " <= d4 <= " << frac(b["upper"]) << '\n';
  }
  if (a.locate.size() == 2) {
    const char* where = nullptr;
    check(trisq_polygon_locate(a.r, a.locate[0].c_str(), a.locate[1].c_str(), &where), "locate");
    std::cout << "(" << a.locate[0] << ", " << a.locate[1] << "): " << where << '\n';
  }
  return kExitOk;
}

// -- construct ----------------------------------------------------------------

struct ConstructArgs {
  unsigned r = 3;
  unsigned l = 0;
  bool have_l = false;
  std::vector<unsigned> sizes;
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string report;
  std::string hypergraph;
};

int run_construct(const ConstructArgs& a) {
  if (!a.have_l && a.sizes.empty()) throw Failure{kExitUsage, "construct: give l or --sizes"};
  trisq_extreme* raw_ext = nullptr;
  check(trisq_extreme_build(a.r, a.l, a.sizes.data(), a.sizes.size(), a.seed, &raw_ext), "construct");
  ExtremePtr ext(raw_ext);

  char* raw = nullptr;
  check(trisq_graph_to_json(trisq_extreme_graph(ext.get()), &raw), "construct");
  write_output(a.out, take(raw));

  int passed = 0;
  check(trisq_extreme_report(ext.get(), &passed, &raw), "construct report");
  json rep = json::parse(take(raw));
  rep["backend"] = trisq_extreme_backend(ext.get());
  rep["order"] = trisq_graph_order(trisq_extreme_graph(ext.get()));
  if (!a.report.empty()) write_output(a.report, rep.dump(2));

  if (!a.hypergraph.empty()) {
    const trisq_hypergraph* h = trisq_extreme_hypergraph(ext.get());
    if (!h) throw Failure{kExitUsage, "construct: K_{r,r} has no source hypergraph"};
    check(trisq_hypergraph_to_json(h, &raw), "construct hypergraph");
    write_output(a.hypergraph, take(raw));
  }

  std::cerr << "construct r=" << a.r << " partition=" << rep["partition"].dump() << " backend=" << rep["backend"].get<std::string>()
            << " n=" << rep["order"].get<std::size_t>() << '\n';
  for (const auto& c : rep["checks"])
    std::cerr << "  " << (c["passed"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>() << "  "
              << c["detail"].get<std::string>() << '\n';
  return passed ? kExitOk : kExitViolation;
}

// -- realize ------------------------------------------------------------------

struct RealizeArgs {
  unsigned r = 3;
  std::string x, y;
  std::uint64_t seed = 1;
  std::string out;
  bool blueprint_only = false;
  std::size_t max_order = 5'000'000;
};

int run_realize(const RealizeArgs& a) {
  trisq_blueprint* raw_bp = nullptr;
  check(trisq_realize(a.r, a.x.c_str(), a.y.c_str(), a.seed, &raw_bp), "realize");
  BlueprintPtr bp(raw_bp);
  char* raw = nullptr;
  check(trisq_blueprint_json(bp.get(), &raw), "realize");
  std::cout << take(raw) << '\n';

  check(trisq_blueprint_recount(bp.get(), &raw), "realize recount");
  const json recount = json::parse(take(raw));
  std::cerr << "recounted point " << point(recount["point"]) << '\n';
  if (!recount["matches_target"].get<bool>()) {
    std::cerr << "recount does not match the target\n";
    return kExitViolation;
  }

  if (!a.out.empty() && !a.blueprint_only) {
    trisq_graph* raw_g = nullptr;
    check(trisq_blueprint_build(bp.get(), a.max_order, &raw_g), "realize build");
    GraphPtr g(raw_g);
    check(trisq_graph_cycle_point(g.get(), &raw), "realize recount");
    const json cp = json::parse(take(raw));
    if (cp["point"] != recount["point"]) {
      std::cerr << "built graph has cycle point " << point(cp["point"]) << '\n';
      return kExitViolation;
    }
    check(trisq_graph_to_json(g.get(), &raw), "realize");
    write_output(a.out, take(raw));
  }
  return kExitOk;
}

// -- verify -------------------------------------------------------------------

struct VerifyArgs {
  unsigned r = 3;
  unsigned nmax = 8;
  unsigned jobs = 1;
  double time_cap = 0;
  bool json_out = false;
  std::string report;
  bool experimental = false;
  std::size_t sample_n = 0;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  unsigned vmax = 7;
};

int finish_report(ReportPtr rep, const VerifyArgs& a) {
  char* raw = nullptr;
  if (a.json_out) {
    check(trisq_report_json(rep.get(), 1, &raw), "verify");
  } else {
    check(trisq_report_text(rep.get(), &raw), "verify");
  }
  std::cout << take(raw);
  if (!a.report.empty()) {
    check(trisq_report_json(rep.get(), 1, &raw), "verify");
    write_output(a.report, take(raw));
  }
  if (!trisq_report_complete(rep.get())) std::cerr << "warning: time cap reached, report is incomplete\n";
  return trisq_report_passed(rep.get()) ? kExitOk : kExitViolation;
}

int run_verify(const VerifyArgs& a) {
  trisq_report* raw = nullptr;
  if (a.sample_n > 0)
    check(trisq_verify_sampled(a.r, a.sample_n, a.count, a.seed, a.time_cap, a.experimental, &raw), "verify");
  else
    check(trisq_verify_region(a.r, a.nmax, a.jobs, a.time_cap, a.experimental, &raw), "verify");
  return finish_report(ReportPtr(raw), a);
}

int run_bollobas(const VerifyArgs& a) {
  trisq_report* raw = nullptr;
  check(trisq_verify_bollobas(a.vmax, a.time_cap, &raw), "verify bollobas");
  return finish_report(ReportPtr(raw), a);
}

// -- sample -------------------------------------------------------------------

struct SampleArgs {
  unsigned r = 3;
  std::size_t n = 100;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string csv, svg, json_path;
};

int run_sample(const SampleArgs& a) {
  trisq_batch* raw_batch = nullptr;
  check(trisq_sample_batch(a.r, a.n, a.count, a.seed, a.jobs, &raw_batch), "sample");
  BatchPtr batch(raw_batch);
  char* raw = nullptr;
  check(trisq_batch_json(batch.get(), &raw), "sample");
  const std::string text = take(raw);
  if (!a.json_path.empty()) write_output(a.json_path, text);
  if (!a.csv.empty()) {
    check(trisq_batch_csv(batch.get(), &raw), "sample csv");
    write_output(a.csv, take(raw));
  }
  if (!a.svg.empty()) {
    check(trisq_batch_svg(batch.get(), &raw), "sample svg");
    write_output(a.svg, take(raw));
  }
  const json doc = json::parse(text);
  std::cout << "samples r=" << a.r << " n=" << a.n << " count=" << a.count << " seed=" << a.seed << '\n';
  const json& summary = doc["summary"];
  std::cout << "mean " << point(summary["mean"]) << '\n';
  std::cout << "min  " << point(summary["min"]) << '\n';
  std::cout << "max  " << point(summary["max"]) << '\n';
  std::map<std::string, std::size_t> classes;
  for (const auto& p : doc["points"]) ++classes[p["classification"].get<std::string>()];
  std::cout << "classification";
  for (const auto& [k, v] : classes) std::cout << ' ' << k << '=' << v;
  std::cout << '\n';
  return kExitOk;
}

// -- moments ------------------------------------------------------------------

struct MomentsArgs {
  std::string file;
  unsigned k = 4;
  bool json_out = false;
};

int run_moments(const MomentsArgs& a) {
  trisq_graph* raw_g = nullptr;
  check(trisq_graph_load(a.file.c_str(), &raw_g), "moments");
  GraphPtr g(raw_g);
  char* raw = nullptr;
  check(trisq_graph_moments(g.get(), a.k, &raw), "moments");
  const std::string text = take(raw);
  if (a.json_out) {
    std::cout << text << '\n';
    return kExitOk;
  }
  const json doc = json::parse(text);
  for (const auto& m : doc["moments"])
    std::cout << "m" << m["k"].get<unsigned>() << " = " << frac(m["value"]) << "  (" << m["decimal"].get<std::string>()
              << ")\n";
  if (doc.contains("densities")) std::cout << "(d3, d4) = " << point(doc["densities"]) << '\n';
  return kExitOk;
}

// -- limit region -------------------------------------------------------------

struct LimitArgs {
  unsigned cutoff = 64;
  std::vector<std::string> classify;
  std::string svg;
  std::vector<unsigned> rs;
  bool json_out = false;
};

int run_limit(const LimitArgs& a) {
  char* raw = nullptr;
  if (a.classify.size() == 2) {
    const char* where = nullptr;
    check(trisq_limit_region_classify(a.cutoff, a.classify[0].c_str(), a.classify[1].c_str(), &where), "limit-region");
    std::cout << "(" << a.classify[0] << ", " << a.classify[1] << "): " << where << '\n';
  } else {
    check(trisq_limit_region_json(a.cutoff, &raw), "limit-region");
    const std::string text = take(raw);
    if (a.json_out) {
      std::cout << text << '\n';
    } else {
      const json doc = json::parse(text);
      std::cout << "limit region, k <= " << a.cutoff << ": " << doc["vertex_count"].get<std::size_t>() << " vertices\n";
      for (const auto& v : doc["vertices"]) std::cout << "  " << point(v) << '\n';
    }
  }
  if (!a.svg.empty()) {
    check(trisq_limit_region_svg(a.cutoff, a.rs.data(), a.rs.size(), &raw), "limit-region svg");
    write_output(a.svg, take(raw));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle and square densities of regular graphs"};
  app.set_version_flag("--version", trisq_version());
  app.require_subcommand(1);

  PolygonArgs pa;
  auto* polygon = app.add_subcommand("polygon", "Vertices of Q^r");
  polygon->add_option("r", pa.r, "degree")->required()->check(CLI::Range(3u, 100000u));
  polygon->add_flag("--json", pa.json_out, "print JSON");
  polygon->add_flag("--scaled", pa.scaled, "apply (x, y) -> (6x/r^2, 8y/r^3)");
  polygon->add_option("--svg", pa.svg, "write an SVG drawing ('-' for stdout)");
  polygon->add_option("--bounds", pa.bounds, "lower and upper d4 at this d3");
  polygon->add_option("--locate", pa.locate, "classify the point X Y")->expected(2);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build the extreme graph C^r_l");
  construct->add_option("r", ca.r, "degree")->required()->check(CLI::Range(3u, 1000u));
  auto* l_opt = construct->add_option("l", ca.l, "number of parts of the balanced partition (0 for K_{r,r})");
  construct->add_option("--sizes", ca.sizes, "explicit partition of r, e.g. --sizes 1,2")->delimiter(',')->excludes(l_opt);
  construct->add_option("--seed", ca.seed, "seed for the randomized construction")->capture_default_str();
  construct->add_option("--out", ca.out, "graph JSON destination")->capture_default_str();
  construct->add_option("--report", ca.report, "write the verification report JSON");
  construct->add_option("--hypergraph", ca.hypergraph, "write the source hypergraph JSON");

  RealizeArgs ra;
  auto* realize = app.add_subcommand("realize", "Realize a rational point of Q^r as a finite graph");
  realize->add_option("r", ra.r, "degree")->required()->check(CLI::Range(3u, 1000u));
  realize->add_option("x", ra.x, "d3, e.g. 1/2")->required();
  realize->add_option("y", ra.y, "d4, e.g. 3/4")->required();
  realize->add_option("--seed", ra.seed, "seed for the extreme graphs")->capture_default_str();
  realize->add_option("--out", ra.out, "write the full graph JSON");
  realize->add_flag("--blueprint-only", ra.blueprint_only, "never build the full graph");
  realize->add_option("--max-order", ra.max_order, "refuse to build larger graphs")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Exhaustive and sampled verification suites");
  verify->add_option("--r", va.r, "degree")->capture_default_str();
  verify->add_option("--nmax", va.nmax, "largest order enumerated")->capture_default_str();
  verify->add_option("--jobs", va.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  verify->add_option("--time-cap", va.time_cap, "seconds; 0 means none")->capture_default_str();
  verify->add_flag("--json", va.json_out, "print the report as JSON");
  verify->add_option("--report", va.report, "write the JSON report to a file");
  verify->add_flag("--experimental", va.experimental, "also tally the averaged-point broken-line check");
  verify->add_option("--sample-n", va.sample_n, "check sampled graphs of this order instead of enumerating");
  verify->add_option("--count", va.count, "number of samples with --sample-n")->capture_default_str();
  verify->add_option("--seed", va.seed, "seed with --sample-n")->capture_default_str();
  auto* bollobas = verify->add_subcommand("bollobas", "Triple counts against the Turan broken line");
  bollobas->add_option("--vmax", va.vmax, "largest order")->capture_default_str()->check(CLI::Range(1u, 8u));
  bollobas->add_option("--time-cap", va.time_cap, "seconds; 0 means none");
  bollobas->add_flag("--json", va.json_out, "print the report as JSON");
  bollobas->add_option("--report", va.report, "write the JSON report to a file");
  verify->require_subcommand(0, 1);

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Configuration-model samples and their cycle points");
  sample->add_option("--r", sa.r, "degree")->capture_default_str();
  sample->add_option("--n", sa.n, "order")->capture_default_str();
  sample->add_option("--count", sa.count, "number of samples")->capture_default_str();
  sample->add_option("--seed", sa.seed, "seed")->capture_default_str();
  sample->add_option("--jobs", sa.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  sample->add_option("--csv", sa.csv, "write per-sample CSV");
  sample->add_option("--svg", sa.svg, "write a scatter plot over Q^r");
  sample->add_option("--json", sa.json_path, "write the batch JSON");

  MomentsArgs ma;
  auto* moments = app.add_subcommand("moments", "Spectral moments of a graph");
  moments->add_option("graph", ma.file, "graph JSON or edge list")->required();
  moments->add_option("--k", ma.k, "highest moment")->capture_default_str()->check(CLI::Range(0u, 64u));
  moments->add_flag("--json", ma.json_out, "print JSON");

  LimitArgs la;
  auto* limit = app.add_subcommand("limit-region", "The scaled limit region Q");
  limit->add_option("--cutoff", la.cutoff, "largest k in (1/k, 1/k^2)")->capture_default_str()->check(CLI::Range(1u, 100000u));
  limit->add_option("--classify", la.classify, "classify the point X Y")->expected(2);
  limit->add_option("--svg", la.svg, "write an SVG drawing");
  limit->add_option("--r", la.rs, "overlay the scaled Q^r in the SVG")->delimiter(',');
  limit->add_flag("--json", la.json_out, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*polygon) return run_polygon(pa);
    if (*construct) {
      ca.have_l = l_opt->count() > 0;
      return run_construct(ca);
    }
    if (*realize) return run_realize(ra);
    if (*verify) return *bollobas ? run_bollobas(va) : run_verify(va);
    if (*sample) return run_sample(sa);
    if (*moments) return run_moments(ma);
    if (*limit) return run_limit(la);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
