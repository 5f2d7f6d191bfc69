#ifndef IFSIM_PEAKS_HPP
#define IFSIM_PEAKS_HPP

#include <map>
#include <string>
#include <vector>

#include "ifsim/analytic.hpp"
#include "ifsim/spectrum.hpp"

namespace ifsim {

/// An integer-combination decomposition of a line frequency over one
/// path's mirror frequencies: frequency = sum_k n_k f_k exactly.
struct PeakLabel {
    long long frequency = 0;
    std::map<std::string, int> coefficients;  // mirror label -> n_k (nonzero)
    int total_order = 0;                      // sum |n_k|, >= 1
    std::vector<int> path_indices;            // paths producing this combination
};

struct PeakEntry {
    int frequency = 0;
    Real power = 0.0L;
    std::vector<PeakLabel> labels;
    bool classified = false;
};

using PeakReport = std::vector<PeakEntry>;

/// All positive-frequency bins with power >= threshold, ascending by
/// frequency (DC excluded).
std::vector<std::pair<int, Real>> detect_peaks(const PowerSpectrum& s, Real threshold);

/// Exhaustive integer search, per path, over multi-indices with
/// sum|n_k| <= max_order whose combination equals f exactly. Searching
/// within single paths only: exact lines can only arise from one path's
/// frequency set. Identical combinations found on several paths merge
/// into one label listing all of them. Sorted by total order, then
/// lexicographically; every tie is reported.
std::vector<PeakLabel> classify(long long f, const InterferometerSpec& spec, int max_order);

/// detect_peaks + classify over a whole spectrum.
PeakReport peak_report(const PowerSpectrum& s, const InterferometerSpec& spec, Real threshold,
                       int max_order);

/// "+1*A+1*E" form used in CSV output.
std::string label_string(const PeakLabel& label);

}  // namespace ifsim

#endif
