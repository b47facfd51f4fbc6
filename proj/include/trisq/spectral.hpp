#pragma once

#include "trisq/graph.hpp"

#include <vector>

namespace trisq {

// Number of closed walks of length k starting and ending at x.
BigInt closed_walks(const Graph& g, Vertex x, unsigned k);

// Probability that the simple random walk from x is back at x after k
// steps. Requires a regular graph.
Rat return_probability(const Graph& g, Vertex x, unsigned k);

// Moments m_0..m_K of the eigenvalue distribution of the transition matrix:
// m_k = trace(A^k) / (n r^k).
struct MomentVector {
  unsigned r = 0;
  std::vector<Rat> moments;
};
MomentVector spectral_moments(const Graph& g, unsigned max_k);

// (d3, d4) <-> (m3, m4) for r-regular graphs.
QPoint densities_to_moments(unsigned r, const QPoint& densities);
QPoint moments_to_densities(unsigned r, const QPoint& moments);

}  // namespace trisq
