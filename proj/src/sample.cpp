#include "trisq/sample.hpp"

#include "json_util.hpp"
#include "trisq/error.hpp"
#include "trisq/random.hpp"

#include <algorithm>
#include <thread>

namespace trisq {

Graph sample_regular(unsigned r, std::size_t n, std::uint64_t seed, std::uint64_t stream, const SampleOptions& options) {
  if (r == 0) throw Error(ErrorCode::invalid_argument, "degree must be positive");
  if ((n * r) % 2 != 0) throw Error(ErrorCode::invalid_argument, "n * r must be even");
  if (n <= r) throw Error(ErrorCode::invalid_argument, "need n > r");

  CounterRng rng(seed, stream);
  std::vector<Vertex> points(n * r);
  std::vector<Edge> edges(points.size() / 2);
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / r);
    rng.shuffle(std::span<Vertex>(points));
    bool simple = true;
    for (std::size_t i = 0; i < edges.size() && simple; ++i) {
      const Vertex u = points[2 * i];
      const Vertex v = points[2 * i + 1];
      simple = u != v;
      edges[i] = {std::min(u, v), std::max(u, v)};
    }
    if (!simple) continue;
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    return Graph(n, sorted);
  }
  throw Error(ErrorCode::construction_failed, "pairing model: no simple graph within the attempt budget");
}

SampleBatch sample_batch(unsigned r, std::size_t n, std::size_t count, std::uint64_t seed, unsigned jobs) {
  if (r < 3) throw Error(ErrorCode::invalid_argument, "sampling against Q^r needs r >= 3");
  SampleBatch batch;
  batch.r = r;
  batch.n = n;
  batch.count = count;
  batch.seed = seed;
  batch.points.resize(count);

  auto work = [&](std::size_t first, std::size_t step) {
    for (std::size_t i = first; i < count; i += step) batch.points[i] = cycle_point(sample_regular(r, n, seed, i));
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j)
      threads.emplace_back([&, j] {
        try {
          work(j, jobs);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  const Polygon q = polygon_qr(r);
  Rat sx = 0;
  Rat sy = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& p = batch.points[i];
    const Location loc = locate(q, p);
    if (loc == Location::outside) throw std::logic_error("sampled point " + to_string(p) + " lies outside Q^r");
    batch.locations.push_back(loc);
    sx += p.x;
    sy += p.y;
    if (i == 0) {
      batch.min = batch.max = p;
    } else {
      if (p.x < batch.min.x) batch.min.x = p.x;
      if (p.y < batch.min.y) batch.min.y = p.y;
      if (p.x > batch.max.x) batch.max.x = p.x;
      if (p.y > batch.max.y) batch.max.y = p.y;
    }
  }
  if (count > 0) {
    const Rat c(BigInt(std::to_string(count)));
    batch.mean = {Rat(sx / c), Rat(sy / c)};
  }
  return batch;
}

std::string batch_to_csv(const SampleBatch& batch) {
  std::string out = "index,d3_num,d3_den,d4_num,d4_den,classification\n";
  for (std::size_t i = 0; i < batch.points.size(); ++i) {
    const auto& p = batch.points[i];
    out += std::to_string(i) + "," + p.x.get_num().get_str() + "," + p.x.get_den().get_str() + "," + p.y.get_num().get_str() +
           "," + p.y.get_den().get_str() + "," + to_string(batch.locations[i]) + "\n";
  }
  return out;
}

std::string batch_to_json(const SampleBatch& batch) {
  nlohmann::json pts = nlohmann::json::array();
  for (std::size_t i = 0; i < batch.points.size(); ++i) {
    auto jp = detail::to_json(batch.points[i]);
    jp["classification"] = to_string(batch.locations[i]);
    pts.push_back(std::move(jp));
  }
  nlohmann::json doc = {{"r", batch.r},
                        {"n", batch.n},
                        {"count", batch.count},
                        {"seed", batch.seed},
                        {"summary",
                         {{"mean", detail::to_json(batch.mean)},
                          {"min", detail::to_json(batch.min)},
                          {"max", detail::to_json(batch.max)}}},
                        {"points", pts}};
  return doc.dump(2);
}

}  // namespace trisq
