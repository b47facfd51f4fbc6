#pragma once

#include "trisq/graph.hpp"
#include "trisq/polytope.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace trisq {

struct SampleOptions {
  std::size_t max_attempts = 1'000'000;
};

// Pairing model: a uniformly random perfect matching of the n*r half-edges,
// rejected and redrawn until it has no loops or repeated edges. Stream
// `stream` of `seed` drives the draws.
Graph sample_regular(unsigned r, std::size_t n, std::uint64_t seed, std::uint64_t stream = 0,
                     const SampleOptions& options = {});

struct SampleBatch {
  unsigned r = 0;
  std::size_t n = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::vector<QPoint> points;
  std::vector<Location> locations;  // against Q^r
  QPoint mean;
  QPoint min;
  QPoint max;
};

// Sample i uses stream i, so the batch does not depend on `jobs`. Throws
// std::logic_error if any point falls outside Q^r.
SampleBatch sample_batch(unsigned r, std::size_t n, std::size_t count, std::uint64_t seed, unsigned jobs = 1);

// Columns: index, d3_num, d3_den, d4_num, d4_den, classification.
std::string batch_to_csv(const SampleBatch& batch);
std::string batch_to_json(const SampleBatch& batch);

}  // namespace trisq
