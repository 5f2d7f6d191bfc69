#include "ifsim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace ifsim {

Real bessel_j(int n, Real x) {
    if (n < 0) {
        Real v = bessel_j(-n, x);
        return ((-n) % 2) ? -v : v;
    }
    const Real half = x / 2;
    Real term = 1;
    for (int i = 1; i <= n; ++i) term *= half / i;  // (x/2)^n / n!
    Real sum = term;
    for (int m = 1; fabsl(term) >= 1e-30L && m < 1000; ++m) {
        term *= -(half * half) / (static_cast<Real>(m) * static_cast<Real>(m + n));
        sum += term;
    }
    return sum;
}

std::vector<PathTerm> enumerate_paths(const InterferometerSpec& spec) {
    struct Partial {
        int port;
        Real weight;
        Real static_phase;
        std::vector<Modulator> mods;
    };
    const Real x = sqrtl(0.5L);
    std::vector<Partial> live;
    live.push_back({spec.injection_port, 1.0L, 0.0L, {}});

    for (const Stage& s : spec.stages) {
        if (const auto* bs = std::get_if<Beamsplitter>(&s)) {
            int lo = bs->port_i, hi = bs->port_j;
            if (lo > hi) std::swap(lo, hi);
            std::vector<Partial> next;
            next.reserve(live.size() * 2);
            for (const Partial& p : live) {
                if (p.port != lo && p.port != hi) {
                    next.push_back(p);
                    continue;
                }
                // column of the mixing block for the incoming port; the
                // minus sign lives at (hi, hi)
                Partial to_lo = p, to_hi = p;
                to_lo.port = lo;
                to_lo.weight = p.weight * x;
                to_hi.port = hi;
                to_hi.weight = (p.port == hi) ? p.weight * -x : p.weight * x;
                next.push_back(std::move(to_lo));
                next.push_back(std::move(to_hi));
            }
            live = std::move(next);
        } else if (const auto* mi = std::get_if<Mirror>(&s)) {
            for (Partial& p : live)
                if (p.port == mi->modulator.port) p.mods.push_back(mi->modulator);
        } else {
            const auto& sp = std::get<StaticPhase>(s);
            for (Partial& p : live)
                if (p.port == sp.port) p.static_phase += static_cast<Real>(sp.phase);
        }
    }

    std::vector<PathTerm> out;
    for (const Partial& p : live)
        if (p.port == spec.detection_port)
            out.push_back({Complex(p.weight, 0), p.static_phase, p.mods});
    return out;
}

Complex AnalyticSpectrum::amplitude(long long f) const {
    auto it = lines.find(f);
    return it == lines.end() ? Complex(0, 0) : it->second;
}

Real AnalyticSpectrum::power(long long f) const { return std::norm(amplitude(f)); }

namespace {

// J_{n}(a) tables per modulator, n = 0..cutoff; negative orders via the
// reflection identity (an exact negation, so sign symmetry is preserved
// bit-for-bit).
std::vector<std::vector<Real>> bessel_tables(const std::vector<Modulator>& mods, int cutoff) {
    std::vector<std::vector<Real>> tables;
    tables.reserve(mods.size());
    for (const Modulator& m : mods) {
        std::vector<Real> t(static_cast<size_t>(cutoff) + 1);
        for (int n = 0; n <= cutoff; ++n) t[static_cast<size_t>(n)] = bessel_j(n, static_cast<Real>(m.amplitude));
        tables.push_back(std::move(t));
    }
    return tables;
}

Real signed_j(const std::vector<Real>& table, int n) {
    Real v = table[static_cast<size_t>(n < 0 ? -n : n)];
    return (n < 0 && (-n) % 2) ? -v : v;
}

}  // namespace

AnalyticSpectrum line_spectrum(const std::vector<PathTerm>& terms, int order_cutoff) {
    if (order_cutoff < 0) throw std::invalid_argument("order cutoff must be nonnegative");
    AnalyticSpectrum out;
    out.order_cutoff = order_cutoff;

    for (const PathTerm& term : terms) {
        const auto tables = bessel_tables(term.modulators, order_cutoff);
        const Complex base =
            term.weight * Complex(cosl(term.static_phase), sinl(term.static_phase));
        const int m = static_cast<int>(term.modulators.size());

        // fixed-order recursion over sideband multi-indices, product built
        // left to right so that mirror-image paths cancel exactly
        std::function<void(int, int, long long, Real)> walk = [&](int pos, int left, long long f,
                                                                  Real prod) {
            if (pos == m) {
                out.lines[f] += base * prod;
                return;
            }
            const long long freq = term.modulators[static_cast<size_t>(pos)].frequency;
            for (int n = -left; n <= left; ++n)
                walk(pos + 1, left - (n < 0 ? -n : n), f + n * freq,
                     prod * signed_j(tables[static_cast<size_t>(pos)], n));
        };
        walk(0, order_cutoff, 0, 1.0L);
    }

    for (auto it = out.lines.begin(); it != out.lines.end();)
        it = (std::abs(it->second) < 1e-30L) ? out.lines.erase(it) : std::next(it);
    return out;
}

CancellationReport cancellation_report(const std::vector<PathTerm>& terms, int order_cutoff) {
    CancellationReport report;

    // labels carried by more than one path
    std::map<std::string, int> label_count;
    for (const PathTerm& t : terms)
        for (const Modulator& m : t.modulators) ++label_count[m.label];
    std::set<std::string> shared;
    for (const auto& [label, count] : label_count)
        if (count >= 2) shared.insert(label);
    if (shared.empty()) return report;

    std::vector<int> involved;
    for (size_t i = 0; i < terms.size(); ++i)
        for (const Modulator& m : terms[i].modulators)
            if (shared.count(m.label)) {
                involved.push_back(static_cast<int>(i));
                break;
            }
    if (involved.size() != 2) return report;

    const PathTerm& t0 = terms[static_cast<size_t>(involved[0])];
    const PathTerm& t1 = terms[static_cast<size_t>(involved[1])];
    std::vector<Modulator> shared_mods;
    for (const Modulator& m : t0.modulators) {
        if (!shared.count(m.label)) continue;
        auto match = std::find_if(t1.modulators.begin(), t1.modulators.end(),
                                  [&](const Modulator& o) { return o.label == m.label; });
        if (match == t1.modulators.end() || match->frequency != m.frequency ||
            match->amplitude != m.amplitude)
            return report;  // guards differ between the two paths
        shared_mods.push_back(m);
    }
    if (shared_mods.size() != shared.size()) return report;
    report.applicable = true;

    // contribution of one term at a pure shared-frequency multi-index:
    // weight * e^{i phase} * prod J_{n}(shared) * prod J_0(unshared)
    auto term_factor = [&](const PathTerm& t) {
        Complex base = t.weight * Complex(cosl(t.static_phase), sinl(t.static_phase));
        Real zeros = 1.0L;
        for (const Modulator& m : t.modulators)
            if (!shared.count(m.label)) zeros *= bessel_j(0, static_cast<Real>(m.amplitude));
        return base * zeros;
    };
    const Complex f0 = term_factor(t0), f1 = term_factor(t1);

    const int m = static_cast<int>(shared_mods.size());
    const auto tables = bessel_tables(shared_mods, order_cutoff);
    std::map<long long, Complex> sums;
    std::function<void(int, int, long long, Real, bool)> walk =
        [&](int pos, int left, long long f, Real prod, bool nonzero) {
            if (pos == m) {
                if (nonzero) sums[f] += f0 * prod + f1 * prod;
                return;
            }
            const long long freq = shared_mods[static_cast<size_t>(pos)].frequency;
            for (int n = -left; n <= left; ++n)
                walk(pos + 1, left - (n < 0 ? -n : n), f + n * freq,
                     prod * signed_j(tables[static_cast<size_t>(pos)], n), nonzero || n != 0);
        };
    walk(0, order_cutoff, 0, 1.0L, false);

    for (const auto& [f, amp] : sums)
        report.entries.push_back({f, amp == Complex(0, 0)});
    return report;
}

}  // namespace ifsim
