#include "a2e/iir.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "a2e/errors.hpp"

namespace a2e {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// Digital biquad denominator from a conjugate (or real double) pole pair.
BiquadSection section_from_pole_pair(cplx p1, cplx p2) {
  BiquadSection s;
  s.a1 = -(p1 + p2).real();
  s.a2 = (p1 * p2).real();
  return s;
}

cplx bilinear(cplx s_pole, double fs) {
  return (2.0 * fs + s_pole) / (2.0 * fs - s_pole);
}

void check_stable(const IirFilter& f) {
  if (max_pole_magnitude(f) >= 1.0)
    throw DesignUnstable("designed filter has a pole on or outside the unit circle");
}

}  // namespace

IirFilter design_bandpass(double low_hz, double high_hz, int order,
                          double fs_hz) {
  if (fs_hz <= 0.0) throw InvalidBand("sample rate must be positive");
  if (!(0.0 < low_hz && low_hz < high_hz && high_hz < fs_hz / 2.0))
    throw InvalidBand("need 0 < low < high < fs/2");
  if (order < 2 || order % 2 != 0)
    throw InvalidBand("bandpass order must be even and >= 2");

  const int n_proto = order / 2;  // analog lowpass prototype order

  // Pre-warped analog band edges.
  const double w1 = 2.0 * fs_hz * std::tan(kPi * low_hz / fs_hz);
  const double w2 = 2.0 * fs_hz * std::tan(kPi * high_hz / fs_hz);
  const double bw = w2 - w1;
  const double w0 = std::sqrt(w1 * w2);

  IirFilter filter;
  filter.kind = FilterKind::bandpass;

  // Lowpass -> bandpass transform of each prototype pole p:
  //   s = (bw*p +/- sqrt((bw*p)^2 - 4 w0^2)) / 2
  auto transform_pole = [&](cplx p) {
    const cplx bp = bw * p;
    const cplx disc = std::sqrt(bp * bp - 4.0 * w0 * w0);
    return std::pair<cplx, cplx>{0.5 * (bp + disc), 0.5 * (bp - disc)};
  };

  // Upper-half-plane Butterworth prototype poles; each yields two bandpass
  // poles whose conjugates come from the mirrored prototype pole.
  for (int k = 0; k < n_proto / 2; ++k) {
    const double theta = kPi * (2.0 * k + 1.0) / (2.0 * n_proto) + kPi / 2.0;
    const cplx p{std::cos(theta), std::sin(theta)};
    auto [sa, sb] = transform_pole(p);
    const cplx za = bilinear(sa, fs_hz);
    const cplx zb = bilinear(sb, fs_hz);
    filter.sections.push_back(section_from_pole_pair(za, std::conj(za)));
    filter.sections.push_back(section_from_pole_pair(zb, std::conj(zb)));
  }
  if (n_proto % 2 == 1) {
    // Real prototype pole at -1: its two bandpass poles form one section.
    auto [sa, sb] = transform_pole(cplx{-1.0, 0.0});
    filter.sections.push_back(
        section_from_pole_pair(bilinear(sa, fs_hz), bilinear(sb, fs_hz)));
  }

  // The analog zeros (n at the origin, n at infinity) map to z = +1 and
  // z = -1; give every section one of each: numerator z^2 - 1.
  for (auto& s : filter.sections) {
    s.b0 = 1.0;
    s.b1 = 0.0;
    s.b2 = -1.0;
  }

  // Normalize cascade gain to 1 at the geometric-mean passband frequency.
  const double fc = std::sqrt(low_hz * high_hz);
  const double mag = std::abs(freq_response(filter, fc, fs_hz));
  if (!(mag > 0.0) || !std::isfinite(mag))
    throw DesignUnstable("bandpass design has no passband gain");
  const double g =
      std::pow(1.0 / mag, 1.0 / static_cast<double>(filter.sections.size()));
  for (auto& s : filter.sections) {
    s.b0 *= g;
    s.b1 *= g;
    s.b2 *= g;
  }

  check_stable(filter);
  return filter;
}

IirFilter design_notch(double f0_hz, double q, double fs_hz) {
  if (fs_hz <= 0.0) throw InvalidBand("sample rate must be positive");
  if (!(0.0 < f0_hz && f0_hz < fs_hz / 2.0))
    throw InvalidBand("need 0 < f0 < fs/2");
  if (q <= 0.0) throw InvalidBand("notch q must be positive");

  const double w0 = 2.0 * kPi * f0_hz / fs_hz;
  const double alpha = std::sin(w0) / (2.0 * q);
  const double cs = std::cos(w0);
  const double a0 = 1.0 + alpha;

  BiquadSection s;
  s.b0 = 1.0 / a0;
  s.b1 = -2.0 * cs / a0;
  s.b2 = 1.0 / a0;
  s.a1 = -2.0 * cs / a0;
  s.a2 = (1.0 - alpha) / a0;

  IirFilter filter;
  filter.kind = FilterKind::notch;
  filter.sections.push_back(s);
  check_stable(filter);
  return filter;
}

std::vector<double> filter_apply(const IirFilter& filter,
                                 const std::vector<double>& samples) {
  std::vector<double> y = samples;
  for (const auto& s : filter.sections) {
    // Direct form II transposed, zero initial state.
    double z1 = 0.0, z2 = 0.0;
    for (double& v : y) {
      const double x = v;
      const double out = s.b0 * x + z1;
      z1 = s.b1 * x - s.a1 * out + z2;
      z2 = s.b2 * x - s.a2 * out;
      v = out;
    }
  }
  return y;
}

Signal filter_apply(const IirFilter& filter, const Signal& signal) {
  signal.validate();
  if (signal.samples_per_channel() == 0)
    throw Error("filter_apply: empty signal");
  Signal out;
  out.sample_rate_hz = signal.sample_rate_hz;
  out.channels.reserve(signal.channels.size());
  for (const auto& ch : signal.channels)
    out.channels.push_back(filter_apply(filter, ch));
  return out;
}

std::complex<double> freq_response(const IirFilter& filter, double f_hz,
                                   double fs_hz) {
  const cplx z = std::polar(1.0, 2.0 * kPi * f_hz / fs_hz);
  const cplx zi = 1.0 / z;
  cplx h{1.0, 0.0};
  for (const auto& s : filter.sections) {
    const cplx num = s.b0 + s.b1 * zi + s.b2 * zi * zi;
    const cplx den = 1.0 + s.a1 * zi + s.a2 * zi * zi;
    h *= num / den;
  }
  return h;
}

std::pair<std::complex<double>, std::complex<double>> section_poles(
    const BiquadSection& s) {
  const cplx disc = std::sqrt(cplx{s.a1 * s.a1 - 4.0 * s.a2, 0.0});
  return {0.5 * (-s.a1 + disc), 0.5 * (-s.a1 - disc)};
}

double max_pole_magnitude(const IirFilter& filter) {
  double m = 0.0;
  for (const auto& s : filter.sections) {
    auto [p1, p2] = section_poles(s);
    m = std::max({m, std::abs(p1), std::abs(p2)});
  }
  return m;
}

}  // namespace a2e
