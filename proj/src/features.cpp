#include "a2e/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "a2e/binio.hpp"
#include "a2e/errors.hpp"
#include "a2e/fft.hpp"

namespace a2e {

namespace {

constexpr double kPi = std::numbers::pi;

// hop/window sizes must land on whole samples
int samples_from_ms(double ms, double fs_hz, const char* what) {
  const double exact = ms * fs_hz / 1000.0;
  const double rounded = std::round(exact);
  if (std::abs(exact - rounded) > 1e-6 || rounded < 1.0)
    throw Error(std::string(what) + ": " + std::to_string(ms) +
                " ms is not a whole positive number of samples at fs=" +
                std::to_string(fs_hz));
  return static_cast<int>(rounded);
}

int frame_count_for(std::size_t n_samples, int hop) {
  return static_cast<int>((n_samples + hop - 1) / static_cast<std::size_t>(hop));
}

double window_mean(const double* x, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += x[i];
  return s / n;
}

double window_rms(const double* x, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += x[i] * x[i];
  return std::sqrt(s / n);
}

double window_zcr(const double* x, int n) {
  if (n < 2) return 0.0;
  int crossings = 0;
  for (int i = 1; i < n; ++i)
    if (x[i - 1] * x[i] < 0.0) ++crossings;
  return static_cast<double>(crossings) / (n - 1);
}

double window_kurtosis(const double* x, int n) {
  const double mu = window_mean(x, n);
  double m2 = 0.0, m4 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = x[i] - mu;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m4 /= n;
  if (m2 < 1e-24) return 0.0;  // constant window
  return m4 / (m2 * m2) - 3.0;
}

double compute_statistic(EegStatistic s, const double* x, int n) {
  switch (s) {
    case EegStatistic::rms: return window_rms(x, n);
    case EegStatistic::zero_crossing_rate: return window_zcr(x, n);
    case EegStatistic::mean: return window_mean(x, n);
    case EegStatistic::kurtosis: return window_kurtosis(x, n);
  }
  throw Error("unknown EEG statistic");
}

}  // namespace

double hz_to_mel(double f_hz) { return 2595.0 * std::log10(1.0 + f_hz / 700.0); }

double mel_to_hz(double m) { return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0); }

EegStatistic eeg_statistic_from_name(const std::string& name) {
  if (name == "rms") return EegStatistic::rms;
  if (name == "zcr" || name == "zero_crossing_rate")
    return EegStatistic::zero_crossing_rate;
  if (name == "mean") return EegStatistic::mean;
  if (name == "kurtosis") return EegStatistic::kurtosis;
  throw Error("unknown EEG statistic: " + name);
}

std::string eeg_statistic_name(EegStatistic s) {
  switch (s) {
    case EegStatistic::rms: return "rms";
    case EegStatistic::zero_crossing_rate: return "zcr";
    case EegStatistic::mean: return "mean";
    case EegStatistic::kurtosis: return "kurtosis";
  }
  return "?";
}

std::vector<double> mel_filter_centers_hz(int n_filters, double fs_hz) {
  const double mel_max = hz_to_mel(fs_hz / 2.0);
  std::vector<double> centers(n_filters);
  for (int m = 0; m < n_filters; ++m)
    centers[m] = mel_to_hz(mel_max * (m + 1) / (n_filters + 1));
  return centers;
}

Eigen::MatrixXd mel_filterbank(int n_filters, int fft_size, double fs_hz) {
  const int n_bins = fft_size / 2 + 1;
  const double mel_max = hz_to_mel(fs_hz / 2.0);

  // n_filters + 2 edge points equally spaced on the mel scale.
  std::vector<double> edges_hz(n_filters + 2);
  for (int m = 0; m < n_filters + 2; ++m)
    edges_hz[m] = mel_to_hz(mel_max * m / (n_filters + 1));

  Eigen::MatrixXd fb = Eigen::MatrixXd::Zero(n_filters, n_bins);
  for (int m = 0; m < n_filters; ++m) {
    const double left = edges_hz[m];
    const double center = edges_hz[m + 1];
    const double right = edges_hz[m + 2];
    for (int k = 0; k < n_bins; ++k) {
      const double f = k * fs_hz / fft_size;
      double w = 0.0;
      if (f >= left && f <= center && center > left)
        w = (f - left) / (center - left);
      else if (f > center && f <= right && right > center)
        w = (right - f) / (right - center);
      fb(m, k) = w;
    }
  }
  return fb;
}

std::vector<double> dct2(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> y(n, 0.0);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      s += x[i] * std::cos(kPi * k * (2.0 * i + 1.0) / (2.0 * n));
    const double scale = k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
    y[k] = scale * s;
  }
  return y;
}

std::vector<double> idct2(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
      const double scale = k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
      s += scale * x[k] * std::cos(kPi * k * (2.0 * i + 1.0) / (2.0 * n));
    }
    y[i] = s;
  }
  return y;
}

FeatureSequence extract_mfcc(const Signal& signal, const MfccConfig& config) {
  signal.validate();
  if (signal.channel_count() != 1)
    throw Error("extract_mfcc: expected a single-channel signal");
  if (config.n_coeffs < 1 || config.n_coeffs > config.n_mel_filters)
    throw Error("extract_mfcc: need 1 <= n_coeffs <= n_mel_filters");
  if (!is_power_of_two(config.fft_size))
    throw Error("extract_mfcc: fft_size must be a power of two");

  const double fs = signal.sample_rate_hz;
  const int hop = samples_from_ms(config.hop_ms, fs, "hop_ms");
  const int win = samples_from_ms(config.window_ms, fs, "window_ms");
  if (win > config.fft_size)
    throw Error("extract_mfcc: window longer than fft_size");

  const auto& x = signal.channels.front();
  if (x.empty()) throw SignalTooShort("extract_mfcc: empty signal");

  const int n_frames = frame_count_for(x.size(), hop);

  // Pre-emphasis, then center padding with zeros so frame t is centered
  // on sample t*hop and the last frame always fits.
  std::vector<double> emph(x.size());
  emph[0] = x[0];
  for (std::size_t i = 1; i < x.size(); ++i)
    emph[i] = x[i] - config.pre_emphasis * x[i - 1];

  const int pad_left = win / 2;
  const std::size_t padded_len = static_cast<std::size_t>(n_frames - 1) * hop + win;
  std::vector<double> padded(std::max(padded_len, emph.size() + pad_left), 0.0);
  std::copy(emph.begin(), emph.end(), padded.begin() + pad_left);

  std::vector<double> hamming(win);
  for (int i = 0; i < win; ++i)
    hamming[i] = 0.54 - 0.46 * std::cos(2.0 * kPi * i / (win - 1));

  const Eigen::MatrixXd fb =
      mel_filterbank(config.n_mel_filters, config.fft_size, fs);
  const int n_bins = config.fft_size / 2 + 1;

  FeatureSequence out;
  out.kind = FeatureKind::mfcc;
  out.frame_rate_hz = 1000.0 / config.hop_ms;
  out.frames.resize(n_frames, config.n_coeffs);

  std::vector<double> frame(win);
  for (int t = 0; t < n_frames; ++t) {
    const std::size_t start = static_cast<std::size_t>(t) * hop;
    for (int i = 0; i < win; ++i) frame[i] = padded[start + i] * hamming[i];

    const auto spectrum = fft_real(frame, config.fft_size);
    Eigen::VectorXd mag(n_bins);
    for (int k = 0; k < n_bins; ++k) mag(k) = std::abs(spectrum[k]);

    const Eigen::VectorXd energies = fb * mag;
    std::vector<double> log_e(config.n_mel_filters);
    for (int m = 0; m < config.n_mel_filters; ++m)
      log_e[m] = std::log(std::max(energies(m), config.log_floor));

    const auto cepstrum = dct2(log_e);
    for (int c = 0; c < config.n_coeffs; ++c) out.frames(t, c) = cepstrum[c];
  }
  return out;
}

FeatureSequence extract_eeg_features(const Signal& signal,
                                     const EegFeatureConfig& config) {
  signal.validate();
  if (signal.channel_count() != config.channels)
    throw DimMismatch("extract_eeg_features: signal has " +
                      std::to_string(signal.channel_count()) +
                      " channels, config declares " +
                      std::to_string(config.channels));
  if (config.statistics.empty())
    throw Error("extract_eeg_features: no statistics configured");

  const double fs = signal.sample_rate_hz;
  const int hop = samples_from_ms(config.hop_ms, fs, "hop_ms");
  const int win = samples_from_ms(config.window_ms, fs, "window_ms");

  const std::size_t n = signal.samples_per_channel();
  if (n == 0) throw SignalTooShort("extract_eeg_features: empty signal");

  const int n_frames = frame_count_for(n, hop);
  const int n_stats = static_cast<int>(config.statistics.size());

  FeatureSequence out;
  out.kind = FeatureKind::eeg_raw;
  out.frame_rate_hz = 1000.0 / config.hop_ms;
  out.frames.resize(n_frames, config.output_dim());

  for (int t = 0; t < n_frames; ++t) {
    // Trailing window ending at sample t*hop, clipped at the start.
    const long end = static_cast<long>(t) * hop;
    const long begin = std::max<long>(0, end - win + 1);
    const int len = static_cast<int>(end - begin + 1);
    for (int c = 0; c < config.channels; ++c) {
      const double* w = signal.channels[c].data() + begin;
      for (int s = 0; s < n_stats; ++s)
        out.frames(t, c * n_stats + s) =
            compute_statistic(config.statistics[s], w, len);
    }
  }
  return out;
}

FeatureSequence read_eaf1(const std::string& path) {
  auto in = binio::open_in(path);
  binio::expect_magic(in, "EAF1", path);
  const auto rows = binio::read_le<std::uint32_t>(in, "rows");
  const auto cols = binio::read_le<std::uint32_t>(in, "cols");
  const auto rate = binio::read_le<double>(in, "frame rate");
  const auto kind_tag = binio::read_le<std::uint8_t>(in, "kind");
  if (kind_tag > 2) throw CorruptFile(path + ": bad feature kind tag");

  FeatureSequence f;
  f.frame_rate_hz = rate;
  f.kind = static_cast<FeatureKind>(kind_tag);
  f.frames.resize(rows, cols);
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c)
      f.frames(r, c) = static_cast<double>(binio::read_le<float>(in, "value"));
  return f;
}

void write_eaf1(const std::string& path, const FeatureSequence& features) {
  auto out = binio::open_out(path);
  binio::write_magic(out, "EAF1");
  binio::write_le<std::uint32_t>(
      out, static_cast<std::uint32_t>(features.frames.rows()));
  binio::write_le<std::uint32_t>(
      out, static_cast<std::uint32_t>(features.frames.cols()));
  binio::write_le<double>(out, features.frame_rate_hz);
  binio::write_le<std::uint8_t>(out, static_cast<std::uint8_t>(features.kind));
  for (int r = 0; r < features.frames.rows(); ++r)
    for (int c = 0; c < features.frames.cols(); ++c)
      binio::write_le<float>(out, static_cast<float>(features.frames(r, c)));
  if (!out) throw IoFailure("write failed: " + path);
}

}  // namespace a2e
