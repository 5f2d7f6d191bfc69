#ifndef IFSIM_CSV_HPP
#define IFSIM_CSV_HPP

#include <string>

#include "ifsim/analytic.hpp"
#include "ifsim/peaks.hpp"
#include "ifsim/spectrum.hpp"

namespace ifsim {

/// Scientific notation, 17 significant digits.
std::string format_real(Real x);

/// Header "f,G", one row per integer frequency in [f_lo, f_hi].
std::string spectrum_csv(const PowerSpectrum& s, int f_lo, int f_hi);

/// Header "f,re,im,G", one row per integer frequency in [f_lo, f_hi].
std::string analytic_csv(const AnalyticSpectrum& s, int f_lo, int f_hi);

/// Header "f,power,order,label", one row per label ("?" when unclassified).
std::string peaks_csv(const PeakReport& report);

}  // namespace ifsim

#endif
