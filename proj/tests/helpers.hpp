#ifndef IFSIM_TEST_HELPERS_HPP
#define IFSIM_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ifsim/analytic.hpp"
#include "ifsim/config.hpp"
#include "ifsim/network.hpp"

namespace testutil {

using ifsim::Complex;
using ifsim::Real;

inline bool near(Real a, Real b, Real tol) { return fabsl(a - b) <= tol; }

inline bool rel_near(Real a, Real b, Real rel) {
    return fabsl(a - b) <= rel * fmaxl(fabsl(a), fabsl(b));
}

// Reference Bessel J: every term evaluated from scratch (explicit power
// and factorial loops), independent of the library's recurrence.
inline Real reference_bessel(int n, Real x) {
    const int an = n < 0 ? -n : n;
    Real sum = 0;
    for (int m = 0; m <= 60; ++m) {
        Real term = 1;
        for (int i = 0; i < 2 * m + an; ++i) term *= x / 2;
        for (int i = 2; i <= m; ++i) term /= i;
        for (int i = 2; i <= m + an; ++i) term /= i;
        sum += (m % 2) ? -term : term;
    }
    return (n < 0 && an % 2) ? -sum : sum;
}

// The three-path closed form of the preset's detected amplitude, written
// out directly as an independent check expression.
inline Complex closed_form_amplitude(Real t, Real detune) {
    const Real a0 = static_cast<Real>(std::numbers::pi / 100.0);
    const Real two_pi = 2 * std::numbers::pi_v<Real>;
    auto ph = [&](int f) {
        Real ft = static_cast<Real>(f) * t;
        return a0 * sinl(two_pi * (ft - floorl(ft)));
    };
    const Complex i(0, 1);
    Complex term_c = std::exp(i * ph(43));
    Complex term_a = std::exp(i * (ph(37) + ph(159) + ph(179)));
    Complex term_b = std::exp(i * (ph(41) + ph(159) + ph(179)) + i * detune);
    return (2.0L * term_c + term_a - term_b) / 4.0L;
}

// True iff some nonzero integer combination sum n_i f_i = 0 exists with
// sum |n_i| <= max_order.
inline bool has_small_relation(const std::vector<int>& freqs, int max_order) {
    struct Walk {
        const std::vector<int>& f;
        int bound;
        bool found = false;
        void run(size_t pos, int left, long long acc, bool nonzero) {
            if (found) return;
            if (pos == f.size()) {
                if (nonzero && acc == 0) found = true;
                return;
            }
            for (int n = -left; n <= left && !found; ++n)
                run(pos + 1, left - (n < 0 ? -n : n), acc + static_cast<long long>(n) * f[pos],
                    nonzero || n != 0);
        }
    } walk{freqs, max_order};
    walk.run(0, max_order, 0, false);
    return walk.found;
}

// Broad generator for parser and structural properties: any valid spec.
inline ifsim::InterferometerSpec random_spec(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> paths_d(2, 5);
    ifsim::InterferometerSpec spec;
    spec.path_count = paths_d(rng);
    std::uniform_int_distribution<int> port_d(1, spec.path_count);
    spec.injection_port = port_d(rng);
    spec.detection_port = port_d(rng);

    std::uniform_int_distribution<int> count_d(1, 12);
    std::uniform_int_distribution<int> kind_d(0, 99);
    std::uniform_int_distribution<int> freq_d(1, 200);
    std::uniform_real_distribution<double> amp_d(0.0, 0.2);
    std::uniform_real_distribution<double> phase_d(-3.14, 3.14);
    const int stages = count_d(rng);
    int label_counter = 0;
    for (int i = 0; i < stages; ++i) {
        int kind = kind_d(rng);
        if (kind < 45) {
            int a = port_d(rng), b = port_d(rng);
            while (b == a) b = port_d(rng);
            spec.stages.push_back(ifsim::make_beamsplitter(a, b));
        } else if (kind < 85) {
            std::string label = "M" + std::to_string(++label_counter);
            spec.stages.push_back(
                ifsim::Mirror{{label, port_d(rng), freq_d(rng), amp_d(rng)}});
        } else {
            spec.stages.push_back(ifsim::StaticPhase{port_d(rng), phase_d(rng)});
        }
    }
    if (spec.stages.empty()) spec.stages.push_back(ifsim::make_beamsplitter(1, 2));
    return spec;
}

// Constrained generator for oracle/numeric equivalence runs: mirror
// frequencies in [20, 200] with no integer relation up to order 14 (a
// relation would let sidebands beyond the expansion cutoff land on
// compared bins), amplitudes up to pi/50, and at least one live path.
inline ifsim::InterferometerSpec random_oracle_spec(std::mt19937_64& rng) {
    for (;;) {
        std::uniform_int_distribution<int> paths_d(2, 4);
        ifsim::InterferometerSpec spec;
        spec.path_count = paths_d(rng);
        std::uniform_int_distribution<int> port_d(1, spec.path_count);
        spec.injection_port = port_d(rng);
        spec.detection_port = port_d(rng);

        std::uniform_int_distribution<int> mirrors_d(2, 4);
        std::uniform_int_distribution<int> bs_d(2, 5);
        std::uniform_int_distribution<int> phases_d(0, 2);
        std::uniform_int_distribution<int> freq_d(20, 200);
        std::uniform_real_distribution<double> amp_d(1e-4, std::numbers::pi / 50.0);
        std::uniform_real_distribution<double> phase_d(-3.14, 3.14);

        const int n_mirrors = mirrors_d(rng);
        std::vector<int> freqs;
        for (int attempts = 0; attempts < 2000; ++attempts) {
            freqs.clear();
            while (static_cast<int>(freqs.size()) < n_mirrors) {
                int f = freq_d(rng);
                if (std::find(freqs.begin(), freqs.end(), f) == freqs.end()) freqs.push_back(f);
            }
            if (!has_small_relation(freqs, 14)) break;
            freqs.clear();
        }
        if (freqs.empty()) continue;

        std::vector<ifsim::Stage> stages;
        for (int i = 0; i < n_mirrors; ++i)
            stages.push_back(
                ifsim::Mirror{{"M" + std::to_string(i + 1), port_d(rng), freqs[static_cast<size_t>(i)], amp_d(rng)}});
        const int n_bs = bs_d(rng);
        for (int i = 0; i < n_bs; ++i) {
            int a = port_d(rng), b = port_d(rng);
            while (b == a) b = port_d(rng);
            stages.push_back(ifsim::make_beamsplitter(a, b));
        }
        const int n_phases = phases_d(rng);
        for (int i = 0; i < n_phases; ++i)
            stages.push_back(ifsim::StaticPhase{port_d(rng), phase_d(rng)});
        std::shuffle(stages.begin(), stages.end(), rng);
        spec.stages = std::move(stages);

        if (!ifsim::validate(spec).empty()) continue;
        auto terms = ifsim::enumerate_paths(spec);
        if (terms.empty()) continue;
        bool modulated = false;
        for (const auto& t : terms) modulated = modulated || !t.modulators.empty();
        if (!modulated) continue;
        return spec;
    }
}

}  // namespace testutil

#endif
