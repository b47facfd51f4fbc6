#include "trisq/verify.hpp"

#include "trisq/error.hpp"
#include "trisq/hypergraph.hpp"
#include "trisq/polytope.hpp"
#include "trisq/sample.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace trisq {

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class Enumerator {
public:
  Enumerator(const EnumSpec& spec, unsigned part, unsigned parts,
             const std::function<bool(const Graph&, std::uint64_t)>& visit)
      : n_(spec.n), part_(part), parts_(parts), visit_(visit), deficit_(spec.n, static_cast<int>(spec.r)) {}

  std::uint64_t run() {
    if (n_ == 0 || (static_cast<std::uint64_t>(n_) * deficit_[0]) % 2 != 0) return 0;
    descend(0, 0);
    return emitted_;
  }

private:
  void descend(unsigned i, std::uint64_t branch) {
    if (stop_) return;
    while (i < n_ && deficit_[i] == 0) ++i;
    if (i == n_) {
      ++emitted_;
      if (!visit_(Graph(n_, edges_), branch)) stop_ = true;
      return;
    }
    candidates_.resize(n_);
    std::vector<Vertex>& cand = candidates_[i];
    cand.clear();
    for (unsigned j = i + 1; j < n_; ++j)
      if (deficit_[j] > 0) cand.push_back(j);
    if (cand.size() < static_cast<std::size_t>(deficit_[i])) return;
    choose(i, 0, deficit_[i], branch);
  }

  // Picks `need` more neighbors of i from cand[from..].
  void choose(unsigned i, std::size_t from, int need, std::uint64_t branch) {
    if (stop_) return;
    const std::vector<Vertex>& cand = candidates_[i];
    if (need == 0) {
      const int saved = deficit_[i];
      deficit_[i] = 0;
      if (i == 0) {
        const std::uint64_t index = top_index_++;
        if (index % parts_ == part_ && feasible(i)) descend(i + 1, index);
      } else if (feasible(i)) {
        descend(i + 1, branch);
      }
      deficit_[i] = saved;
      return;
    }
    for (std::size_t k = from; k + static_cast<std::size_t>(need) <= cand.size(); ++k) {
      const Vertex j = cand[k];
      --deficit_[j];
      edges_.emplace_back(i, j);
      choose(i, k + 1, need - 1, branch);
      edges_.pop_back();
      ++deficit_[j];
      if (stop_) return;
    }
  }

  // Every later vertex must still find enough partners among later vertices.
  bool feasible(unsigned i) const {
    int open = 0;
    int total = 0;
    for (unsigned j = i + 1; j < n_; ++j)
      if (deficit_[j] > 0) {
        ++open;
        total += deficit_[j];
      }
    if (total % 2 != 0) return false;
    for (unsigned j = i + 1; j < n_; ++j)
      if (deficit_[j] > 0 && deficit_[j] > open - 1) return false;
    return true;
  }

  unsigned n_;
  unsigned part_;
  unsigned parts_;
  const std::function<bool(const Graph&, std::uint64_t)>& visit_;
  std::vector<int> deficit_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> candidates_;
  std::uint64_t top_index_ = 0;
  std::uint64_t emitted_ = 0;
  bool stop_ = false;
};

void check_enum_spec(const EnumSpec& spec) {
  if (spec.r < 1) throw Error(ErrorCode::invalid_argument, "enumeration needs r >= 1");
  if (spec.n > 64) throw Error(ErrorCode::invalid_argument, "enumeration is limited to n <= 64");
}

}  // namespace

std::uint64_t enumerate_regular_part(const EnumSpec& spec, unsigned part, unsigned parts,
                                     const std::function<bool(const Graph&, std::uint64_t)>& visit) {
  check_enum_spec(spec);
  if (parts == 0 || part >= parts) throw Error(ErrorCode::invalid_argument, "bad enumeration part");
  return Enumerator(spec, part, parts, visit).run();
}

std::uint64_t enumerate_regular(const EnumSpec& spec, const GraphVisitor& visit) {
  check_enum_spec(spec);
  if (spec.mode == EnumMode::labeled)
    return enumerate_regular_part(spec, 0, 1, [&](const Graph& g, std::uint64_t) { return visit(g); });

  std::set<std::vector<std::uint64_t>> seen;
  std::uint64_t emitted = 0;
  bool stopped = false;
  enumerate_regular_part(spec, 0, 1, [&](const Graph& g, std::uint64_t) {
    if (!seen.insert(canonical_form(g)).second) return true;
    ++emitted;
    stopped = !visit(g);
    return !stopped;
  });
  return emitted;
}

std::vector<Graph> enumerate_regular_all(const EnumSpec& spec) {
  std::vector<Graph> out;
  enumerate_regular(spec, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

namespace {

class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(static_cast<unsigned>(g.order())) {
    const std::size_t bits = static_cast<std::size_t>(n_) * (n_ > 0 ? n_ - 1 : 0) / 2;
    cur_.assign(bits, 0);
    perm_.assign(n_, 0);
    used_.assign(n_, false);
  }

  std::vector<std::uint8_t> run() {
    search(0);
    return best_;
  }

private:
  // Positions 0..k-1 are filled. The string lists, for each position k, the
  // adjacency of its vertex to positions 0..k-1; we keep the largest.
  void search(unsigned k) {
    if (k == n_) {
      if (best_.empty() || cur_ > best_) best_ = cur_;
      return;
    }
    const std::size_t offset = static_cast<std::size_t>(k) * (k > 0 ? k - 1 : 0) / 2;
    for (unsigned v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      for (unsigned j = 0; j < k; ++j) cur_[offset + j] = g_.has_edge(perm_[j], v) ? 1 : 0;
      if (!best_.empty()) {
        const std::size_t len = offset + k;
        if (std::lexicographical_compare(cur_.begin(), cur_.begin() + static_cast<std::ptrdiff_t>(len), best_.begin(),
                                         best_.begin() + static_cast<std::ptrdiff_t>(len)))
          continue;
      }
      used_[v] = true;
      perm_[k] = v;
      search(k + 1);
      used_[v] = false;
    }
  }

  const Graph& g_;
  unsigned n_;
  std::vector<std::uint8_t> cur_;
  std::vector<std::uint8_t> best_;
  std::vector<Vertex> perm_;
  std::vector<bool> used_;
};

}  // namespace

std::vector<std::uint64_t> canonical_form(const Graph& g) {
  if (g.order() > 64) throw Error(ErrorCode::invalid_argument, "canonical form is limited to n <= 64");
  const auto bits = CanonicalSearch(g).run();
  std::vector<std::uint64_t> out{g.order()};
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i % 64 == 0) out.push_back(0);
    if (bits[i]) out.back() |= std::uint64_t{1} << (i % 64);
  }
  return out;
}

Graph turan_graph(unsigned v, unsigned l) {
  if (l < 1 || l > v) throw Error(ErrorCode::invalid_argument, "Turan graph needs 1 <= l <= v");
  std::vector<unsigned> part_of;
  for (unsigned i = 1; i <= l; ++i)
    for (unsigned k = 0; k < (v + i - 1) / l; ++k) part_of.push_back(i);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < v; ++a)
    for (Vertex b = a + 1; b < v; ++b)
      if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
  return Graph(v, edges);
}

// ---------------------------------------------------------------------------
// Region properties

namespace {

using Clock = std::chrono::steady_clock;

// a*x + b*y + c >= 0 with integer coefficients, for the closed half-plane to
// the left of a directed edge.
struct HalfPlane {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  static HalfPlane left_of(const QPoint& p, const QPoint& q) {
    const Rat ra = -(q.y - p.y);
    const Rat rb = q.x - p.x;
    const Rat rc = -(ra * p.x + rb * p.y);
    BigInt l = 1;
    for (const Rat* v : {&ra, &rb, &rc}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v->get_den().get_mpz_t());
    auto as_int = [&](const Rat& v) {
      const BigInt z = v.get_num() * (l / v.get_den());
      if (!z.fits_slong_p()) throw std::logic_error("half-plane coefficient overflow");
      return static_cast<std::int64_t>(z.get_si());
    };
    return {as_int(ra), as_int(rb), as_int(rc)};
  }

  // Sign of a*(xn/xd) + b*(yn/yd) + c, with xd, yd > 0.
  int side(std::int64_t xn, std::int64_t xd, std::int64_t yn, std::int64_t yd) const {
    const __int128 v = static_cast<__int128>(a) * xn * yd + static_cast<__int128>(b) * yn * xd + static_cast<__int128>(c) * xd * yd;
    return (v > 0) - (v < 0);
  }
};

enum Prop : std::size_t {
  kPointInRegion,
  kVertexUnderSegment,
  kVertexDegreeBound,
  kTildeBound,
  kMassTransport,
  kExtremeTilde,
  kPropCount,
};

const char* const kPropNames[kPropCount] = {"point-in-region", "vertex-under-segment", "vertex-c4-degree-bound",
                                            "tilde-bound", "mass-transport", "extreme-tilde-equals-point"};

class RegionChecker {
public:
  RegionChecker(unsigned r, bool experimental) : r_(r), experimental_(experimental) {
    const Polygon q = polygon_qr(r);
    const auto& v = q.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) region_.push_back(HalfPlane::left_of(v[i], v[(i + 1) % v.size()]));
    // Traversed right to left, so "left of" means on or under the segment.
    segment_ = HalfPlane::left_of(extreme_point(r, 1), extreme_point(r, 0));
    for (unsigned l = r; l > 1; --l) broken_line_.push_back(HalfPlane::left_of(extreme_point(r, l), extreme_point(r, l - 1)));
  }

  static void init(SuiteReport& rep, bool experimental) {
    for (std::size_t p = 0; p < kPropCount; ++p) rep.properties.push_back({kPropNames[p], 0, 0});
    if (experimental) rep.experimental.push_back({"averaged-points-above-broken-line", 0, 0});
  }

  void check(const Graph& g, bool extreme, SuiteReport& rep) {
    const auto n = static_cast<Vertex>(g.order());
    bool failed[kPropCount] = {};
    bool vertex_ok = true;
    bool degree_ok = true;
    std::int64_t s3 = 0, s4 = 0, st = 0, s42 = 0, s43 = 0;
    if (experimental_) {
      c3_.assign(n, 0);
      c4_.assign(n, 0);
    }
    for (Vertex x = 0; x < n; ++x) {
      const LocalProfile p = local_profile(g, x);
      s3 += p.c3;
      s4 += p.c4;
      st += p.ct;
      s42 += p.types[1];
      s43 += p.types[2];
      if (segment_.side(p.c3, 3, p.c4, 4) < 0) vertex_ok = false;
      if (p.c4 > max_c4_given_degrees(r_, p.nbhd_degrees)) degree_ok = false;
      if (experimental_) {
        c3_[x] = p.c3;
        c4_[x] = p.c4;
      }
    }
    const auto nn = static_cast<std::int64_t>(n);
    for (const auto& h : region_)
      if (h.side(s3, 3 * nn, s4, 4 * nn) < 0) failed[kPointInRegion] = true;
    failed[kVertexUnderSegment] = !vertex_ok;
    failed[kVertexDegreeBound] = !degree_ok;
    failed[kTildeBound] = st > s4;
    failed[kMassTransport] = s42 != s43;

    ++rep.graphs_tested;
    for (std::size_t k = 0; k < kPropCount; ++k) {
      if (k == kExtremeTilde && !extreme) continue;
      if (k == kExtremeTilde) failed[k] = st != s4;
      auto& tally = rep.properties[k];
      if (failed[k]) {
        ++tally.failed;
        if (!rep.counterexample) {
          rep.counterexample = g;
          rep.counterexample_property = tally.name;
        }
      } else {
        ++tally.passed;
      }
    }

    if (experimental_) {
      // 6r X = r c3(x) + sum c3(y);  8r Y = r c4(x) + sum c4(y).
      bool above = true;
      const auto rr = static_cast<std::int64_t>(r_);
      for (Vertex x = 0; x < n && above; ++x) {
        std::int64_t a3 = rr * c3_[x];
        std::int64_t a4 = rr * c4_[x];
        for (Vertex y : g.neighbors(x)) {
          a3 += c3_[y];
          a4 += c4_[y];
        }
        for (const auto& h : broken_line_)
          if (h.side(a3, 6 * rr, a4, 8 * rr) < 0) above = false;
      }
      auto& tally = rep.experimental[0];
      ++(above ? tally.passed : tally.failed);
    }
  }

private:
  unsigned r_;
  bool experimental_;
  std::vector<HalfPlane> region_;
  HalfPlane segment_;
  std::vector<HalfPlane> broken_line_;
  std::vector<std::int64_t> c3_;
  std::vector<std::int64_t> c4_;
};

void merge_into(SuiteReport& into, const SuiteReport& part) {
  into.graphs_tested += part.graphs_tested;
  for (std::size_t i = 0; i < into.properties.size(); ++i) {
    into.properties[i].passed += part.properties[i].passed;
    into.properties[i].failed += part.properties[i].failed;
  }
  for (std::size_t i = 0; i < into.experimental.size(); ++i) {
    into.experimental[i].passed += part.experimental[i].passed;
    into.experimental[i].failed += part.experimental[i].failed;
  }
  into.complete = into.complete && part.complete;
}

class Deadline {
public:
  explicit Deadline(double seconds) : start_(Clock::now()), seconds_(seconds) {}
  bool expired() const { return seconds_ > 0 && elapsed() > seconds_; }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

private:
  Clock::time_point start_;
  double seconds_;
};

}  // namespace

SuiteReport run_region_suite(unsigned r, unsigned n_max, const SuiteOptions& options) {
  if (r < 3) throw Error(ErrorCode::invalid_argument, "region suite needs r >= 3");
  if (n_max > 64) throw Error(ErrorCode::invalid_argument, "region suite is limited to n_max <= 64");
  const Deadline deadline(options.time_cap_seconds);
  SuiteReport report;
  report.suite = "region";
  report.parameters = "r=" + std::to_string(r) + " n_max=" + std::to_string(n_max);
  RegionChecker::init(report, options.experimental_averaged_points);

  {
    RegionChecker checker(r, options.experimental_averaged_points);
    for (unsigned l = 1; l <= r; ++l) checker.check(extreme_graph_level(r, l, 1).graph, true, report);
  }

  const unsigned jobs = std::max(1u, options.jobs);
  for (unsigned n = r + 1; n <= n_max && report.complete; ++n) {
    if ((n * r) % 2 != 0) continue;
    const EnumSpec spec{r, n, EnumMode::labeled};
    std::vector<SuiteReport> parts(jobs);
    std::vector<std::uint64_t> first_bad(jobs, UINT64_MAX);
    auto work = [&](unsigned j) {
      SuiteReport& mine = parts[j];
      RegionChecker::init(mine, options.experimental_averaged_points);
      RegionChecker checker(r, options.experimental_averaged_points);
      std::uint64_t counter = 0;
      enumerate_regular_part(spec, j, jobs, [&](const Graph& g, std::uint64_t branch) {
        const bool had = mine.counterexample.has_value();
        checker.check(g, false, mine);
        if (!had && mine.counterexample) first_bad[j] = branch;
        if ((++counter & 0xfff) == 0 && deadline.expired()) {
          mine.complete = false;
          return false;
        }
        return true;
      });
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
      for (auto& t : threads) t.join();
    }
    std::optional<unsigned> first;
    for (unsigned j = 0; j < jobs; ++j) {
      merge_into(report, parts[j]);
      if (parts[j].counterexample && (!first || first_bad[j] < first_bad[*first])) first = j;
    }
    if (!report.counterexample && first) {
      report.counterexample = parts[*first].counterexample;
      report.counterexample_property = parts[*first].counterexample_property;
    }
  }
  if (deadline.expired()) report.complete = false;
  report.wall_seconds = deadline.elapsed();
  return report;
}

SuiteReport run_sampled_region_suite(unsigned r, std::size_t n, std::size_t count, std::uint64_t seed,
                                     const SuiteOptions& options) {
  if (r < 3) throw Error(ErrorCode::invalid_argument, "region suite needs r >= 3");
  const Deadline deadline(options.time_cap_seconds);
  SuiteReport report;
  report.suite = "region-sampled";
  report.parameters = "r=" + std::to_string(r) + " n=" + std::to_string(n) + " count=" + std::to_string(count) +
                      " seed=" + std::to_string(seed);
  RegionChecker::init(report, options.experimental_averaged_points);
  RegionChecker checker(r, options.experimental_averaged_points);
  for (std::size_t i = 0; i < count; ++i) {
    if (deadline.expired()) {
      report.complete = false;
      break;
    }
    checker.check(sample_regular(r, n, seed, i), false, report);
  }
  report.wall_seconds = deadline.elapsed();
  return report;
}

// ---------------------------------------------------------------------------
// Bollobas instance

SuiteReport check_bollobas_instance(unsigned v_max, const SuiteOptions& options) {
  if (v_max > 8) throw Error(ErrorCode::invalid_argument, "exhaustive Bollobas check is limited to v_max <= 8");
  const Deadline deadline(options.time_cap_seconds);
  SuiteReport report;
  report.suite = "bollobas";
  report.parameters = "v_max=" + std::to_string(v_max);
  for (const char* name : {"triple-count", "weighted-triple-count", "reduction-identity", "above-turan-line", "turan-on-line"})
    report.properties.push_back({name, 0, 0});

  auto record = [&](std::size_t k, bool ok, const Graph& g) {
    auto& t = report.properties[k];
    if (ok) {
      ++t.passed;
    } else {
      ++t.failed;
      if (!report.counterexample) {
        report.counterexample = g;
        report.counterexample_property = t.name;
      }
    }
  };

  for (unsigned v = 1; v <= v_max && report.complete; ++v) {
    const std::int64_t vv = v;
    const std::int64_t triples = choose3(vv);

    // Turan points from the part sizes alone.
    std::vector<QPoint> line;
    for (unsigned l = 1; l <= v; ++l) {
      std::vector<std::int64_t> parts;
      for (unsigned i = 1; i <= l; ++i) parts.push_back((v + i - 1) / l);
      std::int64_t e = choose2(vv);
      for (auto p : parts) e -= choose2(p);
      std::int64_t t = 0;
      for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
          for (std::size_t c = b + 1; c < parts.size(); ++c) t += parts[a] * parts[b] * parts[c];
      line.push_back({Rat(e), Rat(t)});
    }
    const std::int64_t max_edges = choose2(vv);
    std::vector<Rat> bound(static_cast<std::size_t>(max_edges) + 1);
    for (std::int64_t e = 0; e <= max_edges; ++e) {
      const Rat x(e);
      for (std::size_t i = 0; i + 1 < line.size(); ++i)
        if (x >= line[i].x && x <= line[i + 1].x) {
          bound[e] = line[i].y + (line[i + 1].y - line[i].y) * (x - line[i].x) / (line[i + 1].x - line[i].x);
          break;
        }
      if (line.size() == 1) bound[e] = line[0].y;
    }

    for (unsigned l = 1; l <= v; ++l) {
      const Graph t = turan_graph(v, l);
      const auto tp = triple_profile(t);
      record(4, Rat(tp.edges) == line[l - 1].x && Rat(tp.n[3]) == line[l - 1].y && bound[tp.edges] == Rat(tp.n[3]), t);
    }

    std::vector<Edge> slots;
    for (Vertex a = 0; a < v; ++a)
      for (Vertex b = a + 1; b < v; ++b) slots.emplace_back(a, b);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if ((mask & 0xffff) == 0 && deadline.expired()) {
        report.complete = false;
        break;
      }
      edges.clear();
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1u) edges.push_back(slots[s]);
      const Graph h(v, edges);
      const auto tp = triple_profile(h);
      const auto& n = tp.n;
      ++report.graphs_tested;
      record(0, n[0] + n[1] + n[2] + n[3] == triples, h);
      record(1, n[1] + 2 * n[2] + 3 * n[3] == (vv - 2) * tp.edges, h);
      record(2, 2 * n[3] + n[2] == n[0] + (vv - 2) * tp.edges - triples, h);
      record(3, Rat(n[3]) >= bound[tp.edges], h);
    }
  }
  if (deadline.expired()) report.complete = false;
  report.wall_seconds = deadline.elapsed();
  return report;
}

// ---------------------------------------------------------------------------

std::string report_to_json(const SuiteReport& report, bool include_time) {
  auto tallies = [](const std::vector<PropertyTally>& ts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : ts) arr.push_back({{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}});
    return arr;
  };
  nlohmann::json doc = {{"suite", report.suite},
                        {"parameters", report.parameters},
                        {"graphs_tested", report.graphs_tested},
                        {"properties", tallies(report.properties)},
                        {"experimental", tallies(report.experimental)},
                        {"complete", report.complete},
                        {"all_passed", report.all_passed()}};
  if (report.counterexample) {
    doc["counterexample"] = {{"property", report.counterexample_property},
                             {"graph", nlohmann::json::parse(graph_to_json(*report.counterexample))}};
  } else {
    doc["counterexample"] = nullptr;
  }
  if (include_time) doc["wall_seconds"] = report.wall_seconds;
  return doc.dump(2);
}

std::string report_to_text(const SuiteReport& report) {
  std::string out = "suite " + report.suite + " (" + report.parameters + ")\n";
  out += "graphs tested: " + std::to_string(report.graphs_tested) + "\n";
  char line[160];
  for (const auto& t : report.properties) {
    std::snprintf(line, sizeof line, "  %-30s passed %12llu  failed %llu\n", t.name.c_str(),
                  static_cast<unsigned long long>(t.passed), static_cast<unsigned long long>(t.failed));
    out += line;
  }
  for (const auto& t : report.experimental) {
    std::snprintf(line, sizeof line, "  [experimental] %-36s passed %llu  failed %llu\n", t.name.c_str(),
                  static_cast<unsigned long long>(t.passed), static_cast<unsigned long long>(t.failed));
    out += line;
  }
  if (report.counterexample)
    out += "counterexample (" + report.counterexample_property + "): " + graph_to_json(*report.counterexample) + "\n";
  out += std::string("result: ") + (report.all_passed() ? "PASS" : "FAIL") +
         (report.complete ? "" : " (incomplete: time cap reached)") + "\n";
  std::snprintf(line, sizeof line, "wall time: %.2f s\n", report.wall_seconds);
  out += line;
  return out;
}

}  // namespace trisq
