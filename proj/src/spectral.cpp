#include "trisq/spectral.hpp"

#include "trisq/error.hpp"
#include "trisq/polytope.hpp"

namespace trisq {

namespace {

std::size_t require_regular(const Graph& g) {
  const auto r = g.regular_degree();
  if (!r || *r == 0) throw Error(ErrorCode::not_regular, "spectral quantities require a regular graph of positive degree");
  return *r;
}

// Walk counts of length `steps` from x, as a sparse vector over the
// vertices reached. Counts are exact big integers.
class WalkVector {
public:
  explicit WalkVector(std::size_t n) : count_(n), stamp_(n, 0) {}

  void start(Vertex x) {
    clear();
    set(x, 1);
  }

  void step(const Graph& g, WalkVector& out) const {
    out.clear();
    for (Vertex v : support_)
      for (Vertex w : g.neighbors(v)) out.add(w, count_[v]);
  }

  BigInt dot(const WalkVector& other) const {
    BigInt total = 0;
    for (Vertex v : support_)
      if (other.stamp_[v] == other.epoch_) total += count_[v] * other.count_[v];
    return total;
  }

  const BigInt& at(Vertex v) const {
    static const BigInt zero = 0;
    return stamp_[v] == epoch_ ? count_[v] : zero;
  }

private:
  void clear() {
    ++epoch_;
    support_.clear();
  }
  void set(Vertex v, const BigInt& c) {
    stamp_[v] = epoch_;
    count_[v] = c;
    support_.push_back(v);
  }
  void add(Vertex v, const BigInt& c) {
    if (stamp_[v] != epoch_) {
      set(v, c);
    } else {
      count_[v] += c;
    }
  }

  std::vector<BigInt> count_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<Vertex> support_;
};

// Closed walks of length k at x: sum over y of walks(x->y, ceil(k/2)) times
// walks(y->x, floor(k/2)).
BigInt closed_walks_with(const Graph& g, Vertex x, unsigned k, WalkVector& a, WalkVector& b, WalkVector& tmp) {
  const unsigned half = k / 2;
  a.start(x);
  for (unsigned i = 0; i < half; ++i) {
    a.step(g, tmp);
    std::swap(a, tmp);
  }
  b.start(x);
  for (unsigned i = 0; i < k - half; ++i) {
    b.step(g, tmp);
    std::swap(b, tmp);
  }
  return a.dot(b);
}

}  // namespace

BigInt closed_walks(const Graph& g, Vertex x, unsigned k) {
  if (x >= g.order()) throw Error(ErrorCode::out_of_range, "vertex " + std::to_string(x) + " out of range");
  WalkVector a(g.order()), b(g.order()), tmp(g.order());
  return closed_walks_with(g, x, k, a, b, tmp);
}

Rat return_probability(const Graph& g, Vertex x, unsigned k) {
  const std::size_t r = require_regular(g);
  BigInt denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), r, k);
  return make_rat(closed_walks(g, x, k), denom);
}

MomentVector spectral_moments(const Graph& g, unsigned max_k) {
  const std::size_t r = require_regular(g);
  MomentVector mv;
  mv.r = static_cast<unsigned>(r);
  WalkVector a(g.order()), b(g.order()), tmp(g.order());
  const BigInt n(std::to_string(g.order()));
  for (unsigned k = 0; k <= max_k; ++k) {
    BigInt trace = 0;
    for (Vertex x = 0; x < g.order(); ++x) trace += closed_walks_with(g, x, k, a, b, tmp);
    BigInt rk;
    mpz_ui_pow_ui(rk.get_mpz_t(), r, k);
    mv.moments.push_back(make_rat(trace, n * rk));
  }
  return mv;
}

QPoint densities_to_moments(unsigned r, const QPoint& densities) { return moment_image(r, densities); }

QPoint moments_to_densities(unsigned r, const QPoint& moments) {
  const Rat rr(r);
  const Rat r3 = rr * rr * rr;
  return {Rat(moments.x * r3 / 6), Rat((moments.y - (2 * rr - 1) / r3) * r3 * rr / 8)};
}

}  // namespace trisq
