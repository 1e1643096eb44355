#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "a2e/signal.hpp"

namespace a2e {

enum class FeatureKind : std::uint8_t { mfcc = 0, eeg_raw = 1, eeg_reduced = 2 };

// Time-major feature matrix (T rows x D columns) at a declared frame rate.
struct FeatureSequence {
  Eigen::MatrixXd frames;
  double frame_rate_hz = 0.0;
  FeatureKind kind = FeatureKind::mfcc;

  int frame_count() const { return static_cast<int>(frames.rows()); }
  int dim() const { return static_cast<int>(frames.cols()); }
};

// "EAF1" file format: magic, u32 rows, u32 cols, f64 frame rate, u8 kind tag,
// row-major f32 values. Bit-exact round trip at f32 precision.
FeatureSequence read_eaf1(const std::string& path);
void write_eaf1(const std::string& path, const FeatureSequence& features);

// Mel scale: m = 2595 log10(1 + f/700).
double hz_to_mel(double f_hz);
double mel_to_hz(double m);

struct MfccConfig {
  int n_coeffs = 13;
  double window_ms = 25.0;
  double hop_ms = 10.0;
  int n_mel_filters = 26;
  int fft_size = 512;
  double log_floor = 1e-10;
  double pre_emphasis = 0.97;
};

// MFCC pipeline: pre-emphasis -> Hamming window -> magnitude spectrum ->
// mel filterbank -> log with floor -> DCT-II, keep the first n_coeffs.
// Framing is center-padded so a signal of N samples yields
// ceil(N / hop_samples) frames. Single-channel input only.
FeatureSequence extract_mfcc(const Signal& signal, const MfccConfig& config = {});

enum class EegStatistic { rms, zero_crossing_rate, mean, kurtosis };

EegStatistic eeg_statistic_from_name(const std::string& name);
std::string eeg_statistic_name(EegStatistic s);

struct EegFeatureConfig {
  double window_ms = 100.0;
  double hop_ms = 10.0;
  std::vector<EegStatistic> statistics{EegStatistic::rms,
                                       EegStatistic::zero_crossing_rate,
                                       EegStatistic::mean};
  int channels = 31;

  int output_dim() const {
    return channels * static_cast<int>(statistics.size());
  }
};

// Per hop, each configured statistic over the trailing window of each
// channel, concatenated channel-major. Output dim = channels * statistics.
FeatureSequence extract_eeg_features(const Signal& signal,
                                     const EegFeatureConfig& config);

// Triangular mel filterbank, rows = filters, cols = fft_size/2 + 1 bins.
Eigen::MatrixXd mel_filterbank(int n_filters, int fft_size, double fs_hz);
// Center frequency (Hz) of each filter.
std::vector<double> mel_filter_centers_hz(int n_filters, double fs_hz);

// Orthonormal DCT-II and its inverse (DCT-III).
std::vector<double> dct2(const std::vector<double>& x);
std::vector<double> idct2(const std::vector<double>& x);

}  // namespace a2e
