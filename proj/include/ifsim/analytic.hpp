#ifndef IFSIM_ANALYTIC_HPP
#define IFSIM_ANALYTIC_HPP

#include <map>
#include <vector>

#include "ifsim/network.hpp"

namespace ifsim {

/// Bessel function of the first kind by its ascending power series,
/// truncated when a term drops below 1e-30. Intended for |x| <= 1 (the
/// modulation amplitudes); J_{-n} = (-1)^n J_n.
Real bessel_j(int n, Real x);

/// One classical path through the pipeline: the product of beamsplitter
/// coefficients (with sign), any static phase picked up, and the
/// modulators encountered in order.
struct PathTerm {
    Complex weight;
    Real static_phase = 0.0L;
    std::vector<Modulator> modulators;  // encounter order
};

/// Depth-first traversal from the injection port; each beamsplitter
/// splits the path in two with the matrix coefficients, mirrors append
/// their modulator, static phases accumulate. Only paths ending on the
/// detection port are kept (deterministic order).
std::vector<PathTerm> enumerate_paths(const InterferometerSpec& spec);

/// Exact line spectrum of the detected amplitude. Each modulated
/// exponential e^{i a sin(2 pi f t)} is a comb of integer sidebands with
/// Bessel weights J_n(a); a path with modulators (f_1..f_m) therefore
/// contributes weight * e^{i phase} * prod_k J_{n_k}(a_k) at frequency
/// sum_k n_k f_k for every multi-index with sum|n_k| <= order_cutoff.
/// Lines from different paths accumulate coherently; equal-weight
/// opposite-sign paths cancel their shared sidebands exactly (bitwise
/// zero, not merely small).
struct AnalyticSpectrum {
    int order_cutoff = 0;
    std::map<long long, Complex> lines;  // amplitudes below 1e-30 pruned

    Complex amplitude(long long f) const;  // 0 for absent frequencies
    Real power(long long f) const;
};

AnalyticSpectrum line_spectrum(const std::vector<PathTerm>& terms, int order_cutoff);

/// For the nested-loop shape (exactly two paths sharing a set of guard
/// modulators), reports for every pure combination of the shared
/// frequencies whether the coherent amplitude is exactly zero.
struct CancellationReport {
    bool applicable = false;
    struct Entry {
        long long frequency;
        bool cancels;
    };
    std::vector<Entry> entries;
};

CancellationReport cancellation_report(const std::vector<PathTerm>& terms, int order_cutoff);

}  // namespace ifsim

#endif
