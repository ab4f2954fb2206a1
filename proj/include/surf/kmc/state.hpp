#pragma once

#include <cstdint>
#include <vector>

#include "surf/common.hpp"
#include "surf/kmc/sum_tree.hpp"
#include "surf/rates.hpp"

namespace surf::kmc {

enum class RateFamily { Metropolis, Arrhenius };

enum class Direction { Right, Left };  // Right: h -> h^{i,i+1}; Left: h -> h^{i+1,i}

struct ModelParams {
  double K = 1.0;
  RateFamily family = RateFamily::Metropolis;
  int N = 0;
  int time_scale_exponent = 4;  // alpha; rough scaling fixes 4
  int amplitude_exponent = 3;   // beta; 3 for heights, 0 for w

  void validate() const;
  double time_scale() const;  // N^alpha
};

struct JumpEvent {
  int bond = 0;
  Direction dir = Direction::Right;
  double waiting_time = 0.0;  // unscaled Exp(R) draw; sim time advances by this / N^alpha
};

// Height profile on the periodic lattice plus every cache the jump loop
// needs: slopes z_i = h_{i+1} - h_i, third differences
// w_i = z_{i-1} - 2 z_i + z_{i+1}, per-bond rates, and their running sum.
// Integer caches are exact; only the sum tree's partial sums can drift.
class SurfaceState {
 public:
  SurfaceState(ModelParams params, std::vector<long> heights, double t0 = 0.0);

  int size() const { return params_.N; }
  const ModelParams& params() const { return params_; }

  const std::vector<long>& heights() const { return h_; }
  const std::vector<long>& slopes() const { return z_; }
  const std::vector<long>& third_diffs() const { return w_; }

  long height(int i) const { return h_[i]; }
  long slope(int i) const { return z_[i]; }
  long third_diff(int i) const { return w_[i]; }
  long second_diff(int i) const;  // z_i - z_{i-1}
  long mass() const;

  double bond_rate(int bond, Direction dir) const {
    return tree_.get(leaf_index(bond, dir));
  }
  double total_rate() const { return tree_.total(); }

  double sim_time() const { return sim_time_; }
  void set_sim_time(double t) { sim_time_ = t; }

  // Applies h -> h^{i,i+1} (Right) or h -> h^{i+1,i} (Left) at the given bond
  // and refreshes the <= 10 affected bond rates.
  void apply_jump(int bond, Direction dir);

  // Selects (bond, direction) with probability rate / total_rate.
  std::pair<int, Direction> sample_jump(double target) const {
    const std::size_t leaf = tree_.sample(target);
    return {static_cast<int>(leaf / 2),
            (leaf % 2 == 0) ? Direction::Right : Direction::Left};
  }

  // Recomputes all caches from the heights.
  void rebuild_caches();
  void rebuild_tree_sums() { tree_.rebuild(); }

  // Throws ModelError if a cached value disagrees with a fresh recompute
  // (integers exactly; rates and total within rel_tol).
  void verify_caches(double rel_tol = 1e-9) const;

 private:
  static std::size_t leaf_index(int bond, Direction dir) {
    return 2 * static_cast<std::size_t>(bond) +
           (dir == Direction::Left ? 1 : 0);
  }
  int wrap(long i) const { return static_cast<int>(wrap_index(i, params_.N)); }
  RatePair bond_rates_from_caches(int bond) const;
  void refresh_bond(int bond);
  double rate_from_int(long arg, bool plus) const;

  ModelParams params_;
  std::vector<long> h_, z_, w_;
  RateSumTree tree_;
  double sim_time_;

  // exp() lookup for the small integer arguments that dominate in practice
  std::vector<RatePair> rate_table_;
  long table_radius_ = 0;
};

}  // namespace surf::kmc
