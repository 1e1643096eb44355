#include "a2e/signal.hpp"

#include <cstdint>

#include "a2e/binio.hpp"
#include "a2e/errors.hpp"

namespace a2e {

void Signal::validate() const {
  if (sample_rate_hz <= 0.0)
    throw Error("Signal: sample_rate_hz must be positive");
  if (channels.empty()) throw Error("Signal: no channels");
  const std::size_t n = channels.front().size();
  for (const auto& ch : channels)
    if (ch.size() != n) throw LengthMismatch("Signal: ragged channel lengths");
}

Signal Signal::mono(std::vector<double> samples, double sample_rate_hz) {
  Signal s;
  s.channels.push_back(std::move(samples));
  s.sample_rate_hz = sample_rate_hz;
  return s;
}

Signal read_sig1(const std::string& path) {
  auto in = binio::open_in(path);
  binio::expect_magic(in, "SIG1", path);
  const auto n_channels = binio::read_le<std::uint32_t>(in, "channel count");
  const auto n_samples = binio::read_le<std::uint32_t>(in, "sample count");
  const auto rate = binio::read_le<double>(in, "sample rate");
  if (n_channels == 0) throw CorruptFile(path + ": zero channels");
  if (rate <= 0.0) throw CorruptFile(path + ": non-positive sample rate");

  Signal s;
  s.sample_rate_hz = rate;
  s.channels.resize(n_channels);
  for (std::uint32_t c = 0; c < n_channels; ++c) {
    auto& ch = s.channels[c];
    ch.resize(n_samples);
    for (std::uint32_t i = 0; i < n_samples; ++i)
      ch[i] = static_cast<double>(binio::read_le<float>(in, "sample"));
  }
  return s;
}

void write_sig1(const std::string& path, const Signal& signal) {
  signal.validate();
  auto out = binio::open_out(path);
  binio::write_magic(out, "SIG1");
  binio::write_le<std::uint32_t>(out,
                                 static_cast<std::uint32_t>(signal.channel_count()));
  binio::write_le<std::uint32_t>(
      out, static_cast<std::uint32_t>(signal.samples_per_channel()));
  binio::write_le<double>(out, signal.sample_rate_hz);
  for (const auto& ch : signal.channels)
    for (double v : ch) binio::write_le<float>(out, static_cast<float>(v));
  if (!out) throw IoFailure("write failed: " + path);
}

}  // namespace a2e
