#ifndef BEAMSEP_FFT_HPP
#define BEAMSEP_FFT_HPP

#include <complex>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace beamsep::fft {

using cvec = std::vector<std::complex<double>>;

namespace detail {
// Eigen::FFT caches one plan per transform size, so a single thread-local
// instance serves all sizes without contention.
inline Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> f;
  return f;
}
inline Eigen::FFT<double>& half_engine() {
  thread_local Eigen::FFT<double> f = [] {
    Eigen::FFT<double> e;
    e.SetFlag(Eigen::FFT<double>::HalfSpectrum);
    return e;
  }();
  return f;
}
}  // namespace detail

/// Unscaled forward DFT of a real frame, full length-n spectrum.
inline cvec forward(const std::vector<double>& x) {
  cvec out;
  detail::engine().fwd(out, x);
  return out;
}

/// Unscaled forward DFT, lower half plus DC: n/2+1 bins. n must be even.
inline cvec forward_half(const std::vector<double>& x) {
  cvec out;
  detail::half_engine().fwd(out, x);
  return out;
}

/// Inverse of forward_half back to n real samples (1/n scaling applied).
inline std::vector<double> inverse_half(const cvec& spectrum, int n) {
  std::vector<double> out;
  detail::half_engine().inv(out, spectrum, n);
  return out;
}

inline cvec forward_complex(const cvec& x) {
  cvec out;
  detail::engine().fwd(out, x);
  return out;
}

inline cvec inverse_complex(const cvec& x) {
  cvec out;
  detail::engine().inv(out, x);
  return out;
}

/// Inverse full-spectrum DFT, keeping only the real part.
inline std::vector<double> inverse_real(const cvec& spectrum) {
  cvec t = inverse_complex(spectrum);
  std::vector<double> out(t.size());
  for (size_t i = 0; i < t.size(); ++i) out[i] = t[i].real();
  return out;
}

}  // namespace beamsep::fft

#endif  // BEAMSEP_FFT_HPP
