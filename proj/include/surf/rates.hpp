#pragma once

#include "surf/common.hpp"

namespace surf {

struct RatePair {
  double plus;   // jump i -> i+1
  double minus;  // jump i+1 -> i
};

// Metropolis bond rates as a function of the third difference w at the bond:
//   r+ = exp(-3K + K w),  r- = exp(-3K - K w).
// Detailed balance: r+(w)/r-(w) = exp(2 K w).
RatePair metropolis_rates(long w, double K);

// Arrhenius rates keyed on the second difference at the departing site;
// left and right rates are equal: r = exp(-2K - 2K w2).
RatePair arrhenius_rates(long w2, double K);

// Bond current J(w) = (r+ - r-)(w) = 2 exp(-3K) sinh(K w).
double observable_J(double w, double K);

// f_i^± = exp(±2K (z_{i-1} - 2 z_i + z_{i+1})); the Gibbs-test observables.
double observable_f_pm(long z_im1, long z_i, long z_ip1, double K, int sign);

// Same observable as a function of the precomputed third difference.
double observable_f_pm_w(double w, double K, int sign);

}  // namespace surf
