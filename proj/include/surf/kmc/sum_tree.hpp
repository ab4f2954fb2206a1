#pragma once

#include <cstddef>
#include <vector>

namespace surf::kmc {

// Complete binary tree over nonnegative leaf rates. set() and sample() are
// O(log n); rebuild() recomputes every partial sum from the leaves to clear
// accumulated floating-point drift.
class RateSumTree {
 public:
  explicit RateSumTree(std::size_t n_leaves);

  std::size_t size() const { return n_; }
  double total() const { return nodes_[1]; }
  double get(std::size_t i) const { return nodes_[cap_ + i]; }

  void set(std::size_t i, double v);

  // Returns the leaf index selected by target in [0, total()).
  std::size_t sample(double target) const;

  void rebuild();

 private:
  std::size_t n_;
  std::size_t cap_;               // power of two >= n_
  std::vector<double> nodes_;     // 1-based heap layout; leaves at [cap_, cap_ + n_)
};

}  // namespace surf::kmc
