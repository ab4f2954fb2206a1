#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace surf {

// Rate/observable evaluation would overflow exp(); indicates a pathological
// input or a bug, never a normal simulation state.
class SaturationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency violation (cache drift, zero total rate, ...).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user-facing input: config values, mismatched series, empty windows.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest argument we allow into exp(); beyond this the model has left the
// regime where doubles are meaningful.
inline constexpr double kExpArgLimit = 700.0;

inline long wrap_index(long i, long n) {
  long r = i % n;
  return r < 0 ? r + n : r;
}

// Stable formatting for CSV/report output (round-trips doubles exactly).
std::string fmt_double(double v);

// FNV-1a 64-bit, used for config hashes and output checksums.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& s);

}  // namespace surf
