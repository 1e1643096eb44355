#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace a2e {

// Raw multichannel signal. All channels share one sample rate and length.
struct Signal {
  std::vector<std::vector<double>> channels;
  double sample_rate_hz = 0.0;

  int channel_count() const { return static_cast<int>(channels.size()); }
  std::size_t samples_per_channel() const {
    return channels.empty() ? 0 : channels.front().size();
  }
  double duration_s() const {
    return sample_rate_hz > 0.0
               ? static_cast<double>(samples_per_channel()) / sample_rate_hz
               : 0.0;
  }

  // Throws if channels are ragged or the sample rate is non-positive.
  void validate() const;

  static Signal mono(std::vector<double> samples, double sample_rate_hz);
};

// "SIG1" file format: magic, u32 channel count, u32 samples per channel,
// f64 sample rate, then channel-major f32 samples. Little-endian.
Signal read_sig1(const std::string& path);
void write_sig1(const std::string& path, const Signal& signal);

}  // namespace a2e
