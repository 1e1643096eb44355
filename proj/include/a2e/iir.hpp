#pragma once

#include <complex>
#include <vector>

#include "a2e/signal.hpp"

namespace a2e {

// One second-order section, denominator normalized so a0 = 1:
//
//   y[n] = b0*x[n] + b1*x[n-1] + b2*x[n-2] - a1*y[n-1] - a2*y[n-2]
struct BiquadSection {
  double b0 = 1.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
};

enum class FilterKind { bandpass, notch };

// Cascade of second-order sections. Designed filters keep every pole
// strictly inside the unit circle.
struct IirFilter {
  std::vector<BiquadSection> sections;
  FilterKind kind = FilterKind::bandpass;
};

// Butterworth bandpass of the given (even) order, realized as order/2
// biquads via bilinear transform with frequency pre-warping. Gain is
// normalized to 1 at the geometric mean of the band edges.
// Throws InvalidBand on bad frequency ordering, DesignUnstable if any
// pole lands on or outside the unit circle.
IirFilter design_bandpass(double low_hz, double high_hz, int order,
                          double fs_hz);

// Second-order notch (band-reject) centered at f0_hz with quality factor q.
// |H(f0)| = 0 and |H(0)| = 1 by construction.
IirFilter design_notch(double f0_hz, double q, double fs_hz);

// Causal single-pass application, zero initial state, each channel
// independently through the cascade. Output length equals input length.
Signal filter_apply(const IirFilter& filter, const Signal& signal);
std::vector<double> filter_apply(const IirFilter& filter,
                                 const std::vector<double>& samples);

// Complex gain at frequency f_hz: product over sections of B(z)/A(z)
// evaluated at z = e^{j 2 pi f / fs}.
std::complex<double> freq_response(const IirFilter& filter, double f_hz,
                                   double fs_hz);

// Roots of z^2 + a1 z + a2 for one section.
std::pair<std::complex<double>, std::complex<double>> section_poles(
    const BiquadSection& s);

// Largest pole magnitude over all sections.
double max_pole_magnitude(const IirFilter& filter);

}  // namespace a2e
