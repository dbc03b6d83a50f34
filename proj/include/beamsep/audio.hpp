#ifndef BEAMSEP_AUDIO_HPP
#define BEAMSEP_AUDIO_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "beamsep/common.hpp"
#include "beamsep/fft.hpp"

namespace beamsep {

/// Amplitude floor applied before the log so silent bins stay finite.
inline constexpr double kDbFloor = 1e-9;

struct TimeSignal {
  std::vector<double> samples;
  int sample_rate = kDefaultSampleRate;

  size_t size() const { return samples.size(); }
  double duration() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

/// T x F time-frequency grid, lower half of the spectrum plus DC (F = frame_len/2 + 1).
struct Spectrogram {
  Eigen::MatrixXcd bins;  // rows: time frames, cols: frequency bins
  int frame_len = 0;
  int hop = 0;
  int sample_rate = kDefaultSampleRate;

  Eigen::Index frames() const { return bins.rows(); }
  Eigen::Index freq_bins() const { return bins.cols(); }
};

/// Real-valued feature grid (dB scale, standardized).
struct FeatureMatrix {
  Eigen::MatrixXd values;  // T x D
};

/// Periodic Hann window, w[n] = 0.5 (1 - cos(2 pi n / n_len)).
/// At 50% overlap the plain sum of shifted copies is exactly 1.
inline std::vector<double> hann_window(int n_len) {
  std::vector<double> w(n_len);
  for (int n = 0; n < n_len; ++n)
    w[n] = 0.5 * (1.0 - std::cos(2.0 * kPi * n / n_len));
  return w;
}

/// STFT with Hann analysis window and 50% overlap. The signal is padded with
/// half a frame of zeros on each side, so T = ceil(len/hop) + 1 and every
/// sample is covered by two frames. F = frame_len/2 + 1.
inline Spectrogram stft(const TimeSignal& signal, int frame_len, int hop) {
  if (signal.samples.empty()) throw std::invalid_argument("stft: empty signal");
  if (frame_len <= 0) throw std::invalid_argument("stft: frame_len must be positive");
  if (frame_len % 2 != 0) throw std::invalid_argument("stft: frame_len must be even");
  if (hop != frame_len / 2)
    throw std::invalid_argument("stft: hop must equal frame_len/2");

  const size_t len = (signal.samples.size() + hop - 1) / hop * hop;  // pad tail to hop multiple
  const int t_frames = static_cast<int>(len) / hop + 1;
  const int f_bins = frame_len / 2 + 1;

  std::vector<double> padded(len + frame_len, 0.0);
  std::copy(signal.samples.begin(), signal.samples.end(), padded.begin() + hop);

  const std::vector<double> window = hann_window(frame_len);
  std::vector<double> frame(frame_len);

  Spectrogram spec;
  spec.bins.resize(t_frames, f_bins);
  spec.frame_len = frame_len;
  spec.hop = hop;
  spec.sample_rate = signal.sample_rate;

  for (int t = 0; t < t_frames; ++t) {
    const size_t off = static_cast<size_t>(t) * hop;
    for (int n = 0; n < frame_len; ++n) frame[n] = padded[off + n] * window[n];
    const fft::cvec bins = fft::forward_half(frame);
    for (int f = 0; f < f_bins; ++f) spec.bins(t, f) = bins[f];
  }
  return spec;
}

/// Overlap-add inverse STFT. A Hann synthesis window is applied to every
/// inverse-transformed frame and the result is normalized by the summed
/// squared window, which reconstructs exactly at 50% overlap.
inline TimeSignal istft(const Spectrogram& spec) {
  if (spec.frame_len <= 0 || spec.hop != spec.frame_len / 2)
    throw std::invalid_argument("istft: inconsistent frame_len/hop");
  if (spec.freq_bins() != spec.frame_len / 2 + 1)
    throw std::invalid_argument("istft: bin count does not match frame_len");
  if (spec.frames() < 1) throw std::invalid_argument("istft: empty spectrogram");

  const int frame_len = spec.frame_len;
  const int hop = spec.hop;
  const int t_frames = static_cast<int>(spec.frames());
  const size_t out_len = static_cast<size_t>(t_frames - 1) * hop;
  const std::vector<double> window = hann_window(frame_len);

  std::vector<double> acc(out_len + frame_len, 0.0);
  std::vector<double> wsum(out_len + frame_len, 0.0);

  fft::cvec bins(spec.freq_bins());
  for (int t = 0; t < t_frames; ++t) {
    for (Eigen::Index f = 0; f < spec.freq_bins(); ++f) bins[f] = spec.bins(t, f);
    const std::vector<double> frame = fft::inverse_half(bins, frame_len);
    const size_t off = static_cast<size_t>(t) * hop;
    for (int n = 0; n < frame_len; ++n) {
      acc[off + n] += frame[n] * window[n];
      wsum[off + n] += window[n] * window[n];
    }
  }

  TimeSignal out;
  out.sample_rate = spec.sample_rate;
  out.samples.resize(out_len);
  for (size_t n = 0; n < out_len; ++n)
    out.samples[n] = acc[n + hop] / wsum[n + hop];
  return out;
}

inline Eigen::MatrixXd magnitudes(const Spectrogram& spec) {
  return spec.bins.cwiseAbs();
}

/// Amplitude decibels with a floor: 20 log10(max(|x|, kDbFloor)).
inline Eigen::MatrixXd to_db(const Eigen::MatrixXd& mags) {
  return mags.unaryExpr(
      [](double m) { return 20.0 * std::log10(std::max(m, kDbFloor)); });
}

/// Shift to zero median and scale to unit standard deviation, computed over
/// all entries. An all-constant matrix maps to all zeros.
inline FeatureMatrix standardize(const Eigen::MatrixXd& features) {
  if (features.size() == 0) throw std::invalid_argument("standardize: empty matrix");
  std::vector<double> flat(features.data(), features.data() + features.size());
  const double med = median(flat);
  const double mean = features.mean();
  const double stddev = std::sqrt((features.array() - mean).square().sum() /
                                  static_cast<double>(features.size()));
  FeatureMatrix out;
  if (stddev == 0.0)
    out.values = Eigen::MatrixXd::Zero(features.rows(), features.cols());
  else
    out.values = (features.array() - med) / stddev;
  return out;
}

}  // namespace beamsep

#endif  // BEAMSEP_AUDIO_HPP
