#ifndef IFSIM_SPECTRUM_HPP
#define IFSIM_SPECTRUM_HPP

#include <utility>
#include <vector>

#include "ifsim/signal.hpp"

namespace ifsim {

/// Power spectrum over one exact period: bin k holds
/// |1/N * sum_j samples[j] e^{-2 pi i k j / N}|^2, i.e. frequency k for
/// k <= N/2 and k - N above. Exact-period rectangular sampling makes this
/// spectrally exact for the band-limited periodic signals produced here,
/// with no leakage and no window.
struct PowerSpectrum {
    int sample_count = 0;
    std::vector<Real> bins;

    int frequency_of_bin(int k) const;
    /// Power at integer frequency f, |f| <= N/2. Throws
    /// std::invalid_argument outside that range.
    Real power_at(long long f) const;
};

/// Full spectrum of a trace. N must be >= 2. Power-of-two N runs through
/// a radix-2 transform; other sizes use the direct compensated sum. Both
/// paths use a fixed summation order, so repeated runs are bit-identical.
PowerSpectrum dft_spectrum(const TimeTrace& t);

/// Single Fourier coefficient by direct Neumaier-compensated summation.
/// Reference path: the transform above is cross-checked against this.
Complex dft_bin(const TimeTrace& t, long long k);

/// Inclusive band slice by positive frequency; requires
/// 0 <= f_lo <= f_hi <= N/2 (throws std::invalid_argument otherwise).
std::vector<std::pair<int, Real>> band(const PowerSpectrum& s, int f_lo, int f_hi);

/// |sum of all bins - mean time-domain power|. Stays below 1e-12 for any
/// valid trace; used as a numeric self-check.
Real parseval_check(const TimeTrace& t, const PowerSpectrum& s);

}  // namespace ifsim

#endif
