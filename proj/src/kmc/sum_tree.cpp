#include "surf/kmc/sum_tree.hpp"

namespace surf::kmc {

RateSumTree::RateSumTree(std::size_t n_leaves) : n_(n_leaves), cap_(1) {
  while (cap_ < n_) cap_ <<= 1;
  nodes_.assign(2 * cap_, 0.0);
}

void RateSumTree::set(std::size_t i, double v) {
  std::size_t k = cap_ + i;
  nodes_[k] = v;
  for (k >>= 1; k >= 1; k >>= 1) {
    nodes_[k] = nodes_[2 * k] + nodes_[2 * k + 1];
    if (k == 1) break;
  }
}

std::size_t RateSumTree::sample(double target) const {
  std::size_t k = 1;
  while (k < cap_) {
    const double left = nodes_[2 * k];
    if (target < left) {
      k = 2 * k;
    } else {
      target -= left;
      k = 2 * k + 1;
    }
  }
  std::size_t leaf = k - cap_;
  if (leaf >= n_) leaf = n_ - 1;  // fp overshoot at the right edge
  // Never land on a zero-rate leaf (possible only through fp rounding).
  while (leaf > 0 && nodes_[cap_ + leaf] <= 0.0) --leaf;
  return leaf;
}

void RateSumTree::rebuild() {
  for (std::size_t k = cap_ - 1; k >= 1; --k) {
    nodes_[k] = nodes_[2 * k] + nodes_[2 * k + 1];
  }
}

}  // namespace surf::kmc
