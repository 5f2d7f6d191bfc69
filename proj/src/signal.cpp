#include "ifsim/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace ifsim {

CVector state_at(const InterferometerSpec& spec, Real t) {
    Real reduced = t - floorl(t);
    CVector v = CVector::basis(spec.path_count, spec.injection_port);
    for (const Stage& s : spec.stages) v = mat_vec(stage_matrix(s, spec.path_count, reduced), v);
    return v;
}

Complex amplitude_at(const InterferometerSpec& spec, Real t) {
    return state_at(spec, t)[spec.detection_port - 1];
}

TimeTrace trace(const InterferometerSpec& spec, int n) {
    if (n < 1) throw std::invalid_argument("sample count must be at least 1");
    TimeTrace out;
    out.sample_count = n;
    out.samples.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        CVector v = state_at(spec, static_cast<Real>(k) / static_cast<Real>(n));
        if (fabsl(v.norm() - 1.0L) > 1e-12L)
            throw std::logic_error("state norm drifted from 1; pipeline is not unitary");
        out.samples.push_back(v[spec.detection_port - 1]);
    }
    return out;
}

}  // namespace ifsim
