#ifndef IFSIM_SIGNAL_HPP
#define IFSIM_SIGNAL_HPP

#include <vector>

#include "ifsim/linalg.hpp"
#include "ifsim/network.hpp"

namespace ifsim {

/// One exact period of the detected amplitude, sample k at t = k/N.
struct TimeTrace {
    int sample_count = 0;
    std::vector<Complex> samples;
};

/// Full state vector after all stages, starting from the injection basis
/// vector. t may be any finite value; it is reduced modulo 1 exactly, so
/// the signal is bit-identically periodic for integer frequencies.
CVector state_at(const InterferometerSpec& spec, Real t);

/// Detection-port component of state_at.
Complex amplitude_at(const InterferometerSpec& spec, Real t);

/// Sample amplitude_at at t = k/N, k = 0..N-1. The state norm is checked
/// at every sample (unitary pipeline, tolerance 1e-12); a violation means
/// a broken spec and throws std::logic_error.
TimeTrace trace(const InterferometerSpec& spec, int n);

}  // namespace ifsim

#endif
