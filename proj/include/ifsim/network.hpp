#ifndef IFSIM_NETWORK_HPP
#define IFSIM_NETWORK_HPP

#include <string>
#include <variant>
#include <vector>

#include "ifsim/linalg.hpp"

namespace ifsim {

/// A vibrating mirror imprinting the phase amplitude*sin(2*pi*frequency*t)
/// on one path. Frequencies are positive integers (cycles per unit time),
/// which makes every signal exactly 1-periodic.
struct Modulator {
    std::string label;
    int port = 0;       // 1-based path index
    int frequency = 0;  // integer cycles per unit time
    double amplitude = 0.0;  // radians

    bool operator==(const Modulator&) const = default;
};

/// 50:50 beamsplitter between two ports. The mixing block is
/// [[x, x], [x, -x]] with x = 1/sqrt(2); the minus sign always sits on
/// the higher-indexed port (fixed convention, not configurable).
struct Beamsplitter {
    int port_i = 0;
    int port_j = 0;

    bool operator==(const Beamsplitter&) const = default;
};

struct Mirror {
    Modulator modulator;

    bool operator==(const Mirror&) const = default;
};

/// Time-independent extra phase on one port (e.g. a deliberate detuning
/// delay on one branch of the nested loop).
struct StaticPhase {
    int port = 0;
    double phase = 0.0;  // radians

    bool operator==(const StaticPhase&) const = default;
};

using Stage = std::variant<Beamsplitter, Mirror, StaticPhase>;

/// An interferometer as an ordered stage pipeline, applied first-to-last
/// in chronological (light-cone) order.
struct InterferometerSpec {
    int path_count = 0;
    int injection_port = 0;
    int detection_port = 0;
    std::vector<Stage> stages;

    bool operator==(const InterferometerSpec&) const = default;
};

/// Normalized beamsplitter stage (ports stored lower-first).
Stage make_beamsplitter(int port_a, int port_b);

/// Instantiate one stage as a unitary path_count x path_count matrix at
/// time t.
CMatrix stage_matrix(const Stage& s, int path_count, Real t);

/// The built-in three-path nested interferometer: a small loop (mirrors A,
/// B at 37 and 41 cycles) nested in one arm of a large loop (mirror C at
/// 43 in the other arm, mirrors E at 159 and F at 179 guarding the nested
/// loop), all modulated with amplitude pi/100. A nonzero detune_phase adds
/// a static phase on the B branch, after mirror B and before the
/// recombining beamsplitter.
InterferometerSpec danan_preset(double detune_phase);

/// Check every structural invariant plus unitarity of each stage matrix
/// at a few sample times. Returns human-readable violations; empty means
/// the layout is valid. Never throws.
std::vector<std::string> validate(const InterferometerSpec& spec);

}  // namespace ifsim

#endif
