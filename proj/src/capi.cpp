#include "trisq/trisq.h"

#include "json_util.hpp"
#include "trisq/error.hpp"
#include "trisq/graph.hpp"
#include "trisq/hypergraph.hpp"
#include "trisq/polytope.hpp"
#include "trisq/realize.hpp"
#include "trisq/sample.hpp"
#include "trisq/spectral.hpp"
#include "trisq/svg.hpp"
#include "trisq/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>

struct trisq_graph {
  trisq::Graph g;
};

struct trisq_hypergraph {
  trisq::Hypergraph h;
};

struct trisq_extreme {
  unsigned r;
  trisq::Partition partition;
  trisq_graph graph;
  std::optional<trisq_hypergraph> hypergraph;
  std::string backend;
};

struct trisq_blueprint {
  trisq::Blueprint bp;
};

struct trisq_report {
  trisq::SuiteReport report;
};

struct trisq_batch {
  trisq::SampleBatch batch;
};

namespace {

using nlohmann::json;
using trisq::detail::to_json;

thread_local std::string g_last_error;

trisq_status from_code(trisq::ErrorCode code) {
  switch (code) {
    case trisq::ErrorCode::invalid_argument: return TRISQ_INVALID_ARGUMENT;
    case trisq::ErrorCode::parse_error: return TRISQ_PARSE_ERROR;
    case trisq::ErrorCode::out_of_range: return TRISQ_OUT_OF_RANGE;
    case trisq::ErrorCode::not_regular: return TRISQ_NOT_REGULAR;
    case trisq::ErrorCode::degree_mismatch: return TRISQ_DEGREE_MISMATCH;
    case trisq::ErrorCode::outside_region: return TRISQ_OUTSIDE_REGION;
    case trisq::ErrorCode::construction_failed: return TRISQ_CONSTRUCTION_FAILED;
    case trisq::ErrorCode::io_error: return TRISQ_IO_ERROR;
  }
  return TRISQ_INTERNAL_ERROR;
}

template <class F>
trisq_status guard(F&& f) noexcept {
  g_last_error.clear();
  try {
    f();
    return TRISQ_OK;
  } catch (const trisq::Error& e) {
    g_last_error = e.what();
    return from_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed JSON: ") + e.what();
    return TRISQ_PARSE_ERROR;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return TRISQ_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return TRISQ_OUT_OF_RANGE;
  } catch (const std::length_error& e) {
    g_last_error = e.what();
    return TRISQ_INTERNAL_ERROR;
  } catch (const std::logic_error& e) {
    // Internal cross-checks throw logic_error when an identity fails.
    g_last_error = e.what();
    return TRISQ_PROPERTY_VIOLATION;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TRISQ_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TRISQ_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return TRISQ_INTERNAL_ERROR;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw trisq::Error(trisq::ErrorCode::invalid_argument, std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  need(out, "output pointer");
  *out = dup(s);
}

trisq::Rat arg_rat(const char* s, const char* what) {
  need(s, what);
  return trisq::parse_rat(s);
}

std::string decimal(const trisq::Rat& q) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", trisq::to_double(q));
  return buf;
}

trisq::Partition make_partition(unsigned r, unsigned l, const unsigned* sizes, size_t nsizes) {
  if (nsizes == 0) {
    if (l > r) throw trisq::Error(trisq::ErrorCode::out_of_range, "l must satisfy 0 <= l <= r");
    return trisq::Partition::balanced(r, l);
  }
  need(sizes, "sizes");
  trisq::Partition p;
  p.parts.assign(sizes, sizes + nsizes);
  std::sort(p.parts.begin(), p.parts.end());
  if (p.parts.front() == 0) throw trisq::Error(trisq::ErrorCode::invalid_argument, "partition parts must be positive");
  if (p.total() != r)
    throw trisq::Error(trisq::ErrorCode::invalid_argument,
                       "partition " + p.to_string() + " does not sum to r = " + std::to_string(r));
  return p;
}

std::string extreme_report_json(const trisq::ExtremeReport& rep, unsigned r, const trisq::Partition& partition, int* passed) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  if (passed) *passed = rep.passed() ? 1 : 0;
  return json{{"r", r}, {"partition", partition.parts}, {"passed", rep.passed()}, {"checks", checks}}.dump(2);
}

}  // namespace

extern "C" {

const char* trisq_version(void) { return "1.0.0"; }

const char* trisq_status_name(trisq_status status) {
  switch (status) {
    case TRISQ_OK: return "ok";
    case TRISQ_INVALID_ARGUMENT: return "invalid_argument";
    case TRISQ_PARSE_ERROR: return "parse_error";
    case TRISQ_OUT_OF_RANGE: return "out_of_range";
    case TRISQ_NOT_REGULAR: return "not_regular";
    case TRISQ_DEGREE_MISMATCH: return "degree_mismatch";
    case TRISQ_OUTSIDE_REGION: return "outside_region";
    case TRISQ_CONSTRUCTION_FAILED: return "construction_failed";
    case TRISQ_IO_ERROR: return "io_error";
    case TRISQ_PROPERTY_VIOLATION: return "property_violation";
    case TRISQ_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

const char* trisq_last_error(void) { return g_last_error.c_str(); }

void trisq_string_free(char* s) { std::free(s); }

// -- graphs -----------------------------------------------------------------

trisq_status trisq_graph_parse(const char* text, trisq_graph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new trisq_graph{trisq::graph_from_text(text)};
  });
}

trisq_status trisq_graph_load(const char* path, trisq_graph** out) {
  return guard([&] {
    need(path, "path");
    need(out, "output pointer");
    *out = new trisq_graph{trisq::load_graph(path)};
  });
}

trisq_status trisq_graph_from_edges(size_t n, const uint32_t* edges, size_t m, trisq_graph** out) {
  return guard([&] {
    if (m > 0) need(edges, "edges");
    need(out, "output pointer");
    std::vector<trisq::Edge> list;
    for (size_t i = 0; i < m; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new trisq_graph{trisq::Graph(n, list)};
  });
}

void trisq_graph_free(trisq_graph* g) { delete g; }

size_t trisq_graph_order(const trisq_graph* g) { return g ? g->g.order() : 0; }

size_t trisq_graph_size(const trisq_graph* g) { return g ? g->g.size() : 0; }

long trisq_graph_regular_degree(const trisq_graph* g) {
  if (!g) return -1;
  const auto d = g->g.regular_degree();
  return d ? static_cast<long>(*d) : -1;
}

trisq_status trisq_graph_to_json(const trisq_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    put(out, trisq::graph_to_json(g->g));
  });
}

trisq_status trisq_graph_cycle_point(const trisq_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    const trisq::QPoint p = trisq::cycle_point(g->g);
    const auto totals = trisq::cycle_totals(g->g);
    put(out, json{{"n", g->g.order()},
                  {"c3", totals.triangles.get_str()},
                  {"c4", totals.squares.get_str()},
                  {"point", to_json(p)}}
                 .dump(2));
  });
}

trisq_status trisq_graph_profile(const trisq_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    json vertices = json::array();
    std::int64_t c3 = 0, c4 = 0, ct = 0, types[4] = {};
    for (trisq::Vertex x = 0; x < g->g.order(); ++x) {
      const auto p = trisq::local_profile(g->g, x);
      vertices.push_back({{"vertex", x},
                          {"c3", p.c3},
                          {"c4", p.c4},
                          {"ct", p.ct},
                          {"types", {p.types[0], p.types[1], p.types[2], p.types[3]}}});
      c3 += p.c3;
      c4 += p.c4;
      ct += p.ct;
      for (int i = 0; i < 4; ++i) types[i] += p.types[i];
    }
    put(out, json{{"vertices", vertices},
                  {"sum", {{"c3", c3}, {"c4", c4}, {"ct", ct}, {"types", {types[0], types[1], types[2], types[3]}}}}}
                 .dump(2));
  });
}

trisq_status trisq_graph_moments(const trisq_graph* g, unsigned max_k, char** out) {
  return guard([&] {
    need(g, "graph");
    const auto mv = trisq::spectral_moments(g->g, max_k);
    json moments = json::array();
    for (std::size_t k = 0; k < mv.moments.size(); ++k)
      moments.push_back({{"k", k}, {"value", to_json(mv.moments[k])}, {"decimal", decimal(mv.moments[k])}});
    json doc{{"r", mv.r}, {"moments", moments}};
    if (g->g.regular_degree() && g->g.order() > 0 && mv.r > 0) {
      const auto d = trisq::cycle_point(g->g);
      doc["densities"] = to_json(d);
      doc["predicted_m3_m4"] = to_json(trisq::densities_to_moments(mv.r, d));
    }
    put(out, doc.dump(2));
  });
}

// -- polygon ----------------------------------------------------------------

trisq_status trisq_polygon_json(unsigned r, int scaled, char** out) {
  return guard([&] {
    const trisq::Polygon q = scaled ? trisq::scaled_polygon(r) : trisq::polygon_qr(r);
    json labels = json::array();
    for (const auto& v : trisq::polygon_qr(r).vertices) {
      for (unsigned l = 0; l <= r; ++l)
        if (trisq::extreme_point(r, l) == v) {
          labels.push_back(l);
          break;
        }
    }
    put(out, json{{"r", r}, {"scaled", scaled != 0}, {"vertex_count", q.vertices.size()},
                  {"vertices", to_json(q)}, {"levels", labels}}
                 .dump(2));
  });
}

trisq_status trisq_polygon_svg(unsigned r, int scaled, char** out) {
  return guard([&] {
    if (scaled)
      put(out, trisq::polygon_svg(trisq::scaled_polygon(r), "scaled Q^" + std::to_string(r), "6 d3 / r^2", "8 d4 / r^3"));
    else
      put(out, trisq::polygon_svg(trisq::polygon_qr(r), "Q^" + std::to_string(r)));
  });
}

trisq_status trisq_polygon_locate(unsigned r, const char* x, const char* y, const char** location) {
  return guard([&] {
    need(location, "output pointer");
    const trisq::QPoint p{arg_rat(x, "x"), arg_rat(y, "y")};
    *location = trisq::to_string(trisq::locate(trisq::polygon_qr(r), p));
  });
}

trisq_status trisq_polygon_bounds(unsigned r, const char* x, char** out) {
  return guard([&] {
    const auto b = trisq::boundary_bounds(r, arg_rat(x, "x"));
    put(out, json{{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}}.dump(2));
  });
}

trisq_status trisq_limit_region_json(unsigned cutoff, char** out) {
  return guard([&] {
    const auto q = trisq::limit_region(cutoff);
    put(out, json{{"cutoff", cutoff}, {"vertex_count", q.vertices.size()}, {"vertices", to_json(q)}}.dump(2));
  });
}

trisq_status trisq_limit_region_svg(unsigned cutoff, const unsigned* rs, size_t nrs, char** out) {
  return guard([&] {
    if (nrs > 0) need(rs, "rs");
    if (nrs == 0) {
      put(out, trisq::limit_region_svg(cutoff));
      return;
    }
    put(out, trisq::scaled_polygons_svg(std::vector<unsigned>(rs, rs + nrs), cutoff));
  });
}

trisq_status trisq_limit_region_classify(unsigned cutoff, const char* x, const char* y, const char** location) {
  return guard([&] {
    need(location, "output pointer");
    const trisq::QPoint p{arg_rat(x, "x"), arg_rat(y, "y")};
    *location = trisq::to_string(trisq::limit_region_contains(p, cutoff));
  });
}

// -- hypergraphs --------------------------------------------------------------

trisq_status trisq_hypergraph_parse(const char* text, trisq_hypergraph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new trisq_hypergraph{trisq::hypergraph_from_json(text)};
  });
}

trisq_status trisq_hypergraph_construct(const unsigned* sizes, size_t nsizes, uint64_t seed, size_t size_hint,
                                        trisq_hypergraph** out) {
  return guard([&] {
    need(out, "output pointer");
    if (nsizes == 0) throw trisq::Error(trisq::ErrorCode::invalid_argument, "at least one hyperedge size is required");
    need(sizes, "sizes");
    trisq::DegreeProfile profile;
    profile.sizes.assign(sizes, sizes + nsizes);
    *out = new trisq_hypergraph{trisq::construct_girth5_hypergraph(profile, seed, size_hint)};
  });
}

void trisq_hypergraph_free(trisq_hypergraph* h) { delete h; }

trisq_status trisq_hypergraph_to_json(const trisq_hypergraph* h, char** out) {
  return guard([&] {
    need(h, "hypergraph");
    put(out, trisq::hypergraph_to_json(h->h));
  });
}

trisq_status trisq_hypergraph_berge_girth(const trisq_hypergraph* h, size_t* girth) {
  return guard([&] {
    need(h, "hypergraph");
    need(girth, "output pointer");
    *girth = trisq::berge_girth(h->h).value_or(0);
  });
}

trisq_status trisq_hypergraph_expand(const trisq_hypergraph* h, trisq_graph** out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "output pointer");
    *out = new trisq_graph{trisq::clique_expansion(h->h)};
  });
}

// -- extreme graphs -----------------------------------------------------------

trisq_status trisq_extreme_build(unsigned r, unsigned l, const unsigned* sizes, size_t nsizes, uint64_t seed,
                                 trisq_extreme** out) {
  return guard([&] {
    need(out, "output pointer");
    const trisq::Partition partition = make_partition(r, l, sizes, nsizes);
    trisq::ExtremeGraph e = trisq::extreme_graph(r, partition, seed);
    auto* ext = new trisq_extreme{r, partition, trisq_graph{std::move(e.graph)}, std::nullopt, e.backend};
    if (e.hypergraph) ext->hypergraph = trisq_hypergraph{std::move(*e.hypergraph)};
    *out = ext;
  });
}

void trisq_extreme_free(trisq_extreme* e) { delete e; }

const trisq_graph* trisq_extreme_graph(const trisq_extreme* e) { return e ? &e->graph : nullptr; }

const trisq_hypergraph* trisq_extreme_hypergraph(const trisq_extreme* e) {
  return e && e->hypergraph ? &*e->hypergraph : nullptr;
}

const char* trisq_extreme_backend(const trisq_extreme* e) { return e ? e->backend.c_str() : ""; }

trisq_status trisq_extreme_report(const trisq_extreme* e, int* passed, char** out) {
  return guard([&] {
    need(e, "extreme graph");
    const auto rep = trisq::verify_extreme(e->graph.g, e->r, e->partition, e->hypergraph ? &e->hypergraph->h : nullptr);
    put(out, extreme_report_json(rep, e->r, e->partition, passed));
  });
}

trisq_status trisq_extreme_check_graph(const trisq_graph* g, unsigned r, unsigned l, const unsigned* sizes,
                                       size_t nsizes, int* passed, char** out) {
  return guard([&] {
    need(g, "graph");
    const trisq::Partition partition = make_partition(r, l, sizes, nsizes);
    const auto rep = trisq::verify_extreme(g->g, r, partition);
    put(out, extreme_report_json(rep, r, partition, passed));
  });
}

// -- realization --------------------------------------------------------------

trisq_status trisq_realize(unsigned r, const char* x, const char* y, uint64_t seed, trisq_blueprint** out) {
  return guard([&] {
    need(out, "output pointer");
    const trisq::QPoint p{arg_rat(x, "x"), arg_rat(y, "y")};
    *out = new trisq_blueprint{trisq::realize(r, p, seed)};
  });
}

void trisq_blueprint_free(trisq_blueprint* bp) { delete bp; }

trisq_status trisq_blueprint_json(const trisq_blueprint* bp, char** out) {
  return guard([&] {
    need(bp, "blueprint");
    put(out, trisq::blueprint_to_json(bp->bp));
  });
}

trisq_status trisq_blueprint_recount(const trisq_blueprint* bp, char** out) {
  return guard([&] {
    need(bp, "blueprint");
    const auto p = trisq::blueprint_point(bp->bp);
    put(out, json{{"point", to_json(p)}, {"matches_target", p == bp->bp.target}}.dump(2));
  });
}

trisq_status trisq_blueprint_build(const trisq_blueprint* bp, size_t max_order, trisq_graph** out) {
  return guard([&] {
    need(bp, "blueprint");
    need(out, "output pointer");
    *out = new trisq_graph{bp->bp.build(max_order)};
  });
}

// -- verification -------------------------------------------------------------

trisq_status trisq_verify_region(unsigned r, unsigned n_max, unsigned jobs, double time_cap_seconds, int experimental,
                                 trisq_report** out) {
  return guard([&] {
    need(out, "output pointer");
    trisq::SuiteOptions opts;
    opts.jobs = jobs;
    opts.time_cap_seconds = std::max(0.0, time_cap_seconds);
    opts.experimental_averaged_points = experimental != 0;
    *out = new trisq_report{trisq::run_region_suite(r, n_max, opts)};
  });
}

trisq_status trisq_verify_sampled(unsigned r, size_t n, size_t count, uint64_t seed, double time_cap_seconds,
                                  int experimental, trisq_report** out) {
  return guard([&] {
    need(out, "output pointer");
    trisq::SuiteOptions opts;
    opts.time_cap_seconds = std::max(0.0, time_cap_seconds);
    opts.experimental_averaged_points = experimental != 0;
    *out = new trisq_report{trisq::run_sampled_region_suite(r, n, count, seed, opts)};
  });
}

trisq_status trisq_verify_bollobas(unsigned v_max, double time_cap_seconds, trisq_report** out) {
  return guard([&] {
    need(out, "output pointer");
    trisq::SuiteOptions opts;
    opts.time_cap_seconds = std::max(0.0, time_cap_seconds);
    *out = new trisq_report{trisq::check_bollobas_instance(v_max, opts)};
  });
}

void trisq_report_free(trisq_report* report) { delete report; }

int trisq_report_passed(const trisq_report* report) { return report && report->report.all_passed() ? 1 : 0; }

int trisq_report_complete(const trisq_report* report) { return report && report->report.complete ? 1 : 0; }

trisq_status trisq_report_json(const trisq_report* report, int include_time, char** out) {
  return guard([&] {
    need(report, "report");
    put(out, trisq::report_to_json(report->report, include_time != 0));
  });
}

trisq_status trisq_report_text(const trisq_report* report, char** out) {
  return guard([&] {
    need(report, "report");
    put(out, trisq::report_to_text(report->report));
  });
}

// -- sampling -----------------------------------------------------------------

trisq_status trisq_sample_graph(unsigned r, size_t n, uint64_t seed, uint64_t stream, trisq_graph** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = new trisq_graph{trisq::sample_regular(r, n, seed, stream)};
  });
}

trisq_status trisq_sample_batch(unsigned r, size_t n, size_t count, uint64_t seed, unsigned jobs, trisq_batch** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = new trisq_batch{trisq::sample_batch(r, n, count, seed, jobs)};
  });
}

void trisq_batch_free(trisq_batch* batch) { delete batch; }

trisq_status trisq_batch_json(const trisq_batch* batch, char** out) {
  return guard([&] {
    need(batch, "batch");
    put(out, trisq::batch_to_json(batch->batch));
  });
}

trisq_status trisq_batch_csv(const trisq_batch* batch, char** out) {
  return guard([&] {
    need(batch, "batch");
    put(out, trisq::batch_to_csv(batch->batch));
  });
}

trisq_status trisq_batch_svg(const trisq_batch* batch, char** out) {
  return guard([&] {
    need(batch, "batch");
    put(out, trisq::sample_scatter_svg(batch->batch));
  });
}

}  // extern "C"
