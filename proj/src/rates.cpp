#include "surf/rates.hpp"

#include <cmath>

namespace surf {

namespace {
void check_exp_arg(double arg, const char* what) {
  if (std::abs(arg) > kExpArgLimit) {
    throw SaturationError(std::string(what) +
                          ": exponent out of range, |arg| = " +
                          std::to_string(std::abs(arg)));
  }
}
}  // namespace

RatePair metropolis_rates(long w, double K) {
  const double kw = K * static_cast<double>(w);
  check_exp_arg(kw, "metropolis_rates");
  const double base = std::exp(-3.0 * K);
  return {base * std::exp(kw), base * std::exp(-kw)};
}

RatePair arrhenius_rates(long w2, double K) {
  const double arg = -2.0 * K - 2.0 * K * static_cast<double>(w2);
  check_exp_arg(arg, "arrhenius_rates");
  const double r = std::exp(arg);
  return {r, r};
}

double observable_J(double w, double K) {
  const double kw = K * w;
  check_exp_arg(kw, "observable_J");
  return 2.0 * std::exp(-3.0 * K) * std::sinh(kw);
}

double observable_f_pm(long z_im1, long z_i, long z_ip1, double K, int sign) {
  const long w = z_im1 - 2 * z_i + z_ip1;
  return observable_f_pm_w(static_cast<double>(w), K, sign);
}

double observable_f_pm_w(double w, double K, int sign) {
  const double arg = (sign >= 0 ? 2.0 : -2.0) * K * w;
  check_exp_arg(arg, "observable_f_pm");
  return std::exp(arg);
}

}  // namespace surf
