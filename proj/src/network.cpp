#include "ifsim/network.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <utility>

namespace ifsim {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

// sin(2*pi*f*t) with the argument reduced exactly before the multiply by
// 2*pi. f*t is exact in extended precision for the frequencies and sample
// times used here, and x - floor(x) is exact in IEEE arithmetic, so the
// only rounding left is the final scale. Skipping the reduction would put
// an error proportional to f*t into the angle and lift the spectral floor
// by several orders of magnitude.
Real sin_2pi(Real x) {
    Real frac = x - floorl(x);
    return sinl(2 * kPi * frac);
}

Complex phase_factor(Real phi) { return Complex(cosl(phi), sinl(phi)); }

}  // namespace

Stage make_beamsplitter(int port_a, int port_b) {
    if (port_a > port_b) std::swap(port_a, port_b);
    return Beamsplitter{port_a, port_b};
}

CMatrix stage_matrix(const Stage& s, int path_count, Real t) {
    CMatrix m = CMatrix::identity(path_count);
    if (const auto* bs = std::get_if<Beamsplitter>(&s)) {
        const Real x = sqrtl(0.5L);
        int lo = bs->port_i - 1, hi = bs->port_j - 1;
        if (lo > hi) std::swap(lo, hi);
        m.at(lo, lo) = Complex(x, 0);
        m.at(lo, hi) = Complex(x, 0);
        m.at(hi, lo) = Complex(x, 0);
        m.at(hi, hi) = Complex(-x, 0);
    } else if (const auto* mi = std::get_if<Mirror>(&s)) {
        const Modulator& mod = mi->modulator;
        Real phi = static_cast<Real>(mod.amplitude) * sin_2pi(static_cast<Real>(mod.frequency) * t);
        m.at(mod.port - 1, mod.port - 1) = phase_factor(phi);
    } else {
        const auto& sp = std::get<StaticPhase>(s);
        m.at(sp.port - 1, sp.port - 1) = phase_factor(static_cast<Real>(sp.phase));
    }
    return m;
}

InterferometerSpec danan_preset(double detune_phase) {
    const double a0 = std::numbers::pi / 100.0;
    InterferometerSpec spec;
    spec.path_count = 3;
    spec.injection_port = 1;
    spec.detection_port = 2;
    spec.stages.push_back(make_beamsplitter(1, 3));
    spec.stages.push_back(Mirror{{"E", 1, 159, a0}});
    spec.stages.push_back(Mirror{{"C", 3, 43, a0}});
    spec.stages.push_back(make_beamsplitter(1, 2));
    spec.stages.push_back(Mirror{{"A", 1, 37, a0}});
    spec.stages.push_back(Mirror{{"B", 2, 41, a0}});
    // The detuning delay sits behind mirror B but in front of the
    // beamsplitter that recombines the nested loop, so only the B branch
    // picks it up.
    if (detune_phase != 0.0) spec.stages.push_back(StaticPhase{2, detune_phase});
    spec.stages.push_back(make_beamsplitter(1, 2));
    spec.stages.push_back(Mirror{{"F", 2, 179, a0}});
    spec.stages.push_back(make_beamsplitter(2, 3));
    return spec;
}

std::vector<std::string> validate(const InterferometerSpec& spec) {
    std::vector<std::string> out;
    auto bad = [&out](const std::string& msg) { out.push_back(msg); };

    if (spec.path_count < 2) bad("path count must be at least 2");
    auto port_ok = [&](int p) { return p >= 1 && p <= spec.path_count; };
    if (!port_ok(spec.injection_port)) bad("injection port out of range");
    if (!port_ok(spec.detection_port)) bad("detection port out of range");
    if (spec.stages.empty()) bad("stage list must not be empty");

    std::set<std::string> labels;
    for (size_t i = 0; i < spec.stages.size(); ++i) {
        const std::string where = "stage " + std::to_string(i + 1) + ": ";
        const Stage& s = spec.stages[i];
        if (const auto* bs = std::get_if<Beamsplitter>(&s)) {
            if (bs->port_i == bs->port_j) bad(where + "beamsplitter ports must differ");
            if (!port_ok(bs->port_i) || !port_ok(bs->port_j))
                bad(where + "beamsplitter port out of range");
        } else if (const auto* mi = std::get_if<Mirror>(&s)) {
            const Modulator& m = mi->modulator;
            if (!port_ok(m.port)) bad(where + "mirror port out of range");
            if (m.frequency < 1) bad(where + "frequency must be a positive integer");
            if (!(m.amplitude >= 0.0)) bad(where + "amplitude must be nonnegative");
            if (!std::isfinite(m.amplitude)) bad(where + "amplitude must be finite");
            if (m.label.empty()) bad(where + "modulator label must not be empty");
            if (!labels.insert(m.label).second)
                bad(where + "duplicate modulator label '" + m.label + "'");
        } else {
            const auto& sp = std::get<StaticPhase>(s);
            if (!port_ok(sp.port)) bad(where + "phase port out of range");
            if (!std::isfinite(sp.phase)) bad(where + "phase must be finite");
        }
    }

    if (out.empty() && spec.path_count >= 2) {
        for (size_t i = 0; i < spec.stages.size(); ++i) {
            for (Real t : {0.0L, 0.13L, 0.77L}) {
                if (!is_unitary(stage_matrix(spec.stages[i], spec.path_count, t), 1e-12L)) {
                    bad("stage " + std::to_string(i + 1) + ": matrix not unitary");
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace ifsim
