#ifndef BEAMSEP_COMMON_HPP
#define BEAMSEP_COMMON_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace beamsep {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr int kDefaultSampleRate = 16000;
inline constexpr double kSpeedOfSound = 343.0;

/// Raised for malformed or unreadable input data (bad WAV, bad manifest, ...).
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a computation produces non-finite values (diverged training, ...).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double energy(const std::vector<double>& x) {
  return std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
}

inline double rms(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  return std::sqrt(energy(x) / static_cast<double>(x.size()));
}

inline double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of empty range");
  const size_t n = v.size();
  auto mid = v.begin() + n / 2;
  std::nth_element(v.begin(), mid, v.end());
  double hi = *mid;
  if (n % 2 == 1) return hi;
  std::nth_element(v.begin(), v.begin() + n / 2 - 1, v.end());
  return 0.5 * (v[n / 2 - 1] + hi);
}

/// Wrap an angle in radians to (-pi, pi].
inline double wrap_phase(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }

inline double db_ratio(double num, double den) {
  return 10.0 * std::log10(num / den);
}

}  // namespace beamsep

#endif  // BEAMSEP_COMMON_HPP
