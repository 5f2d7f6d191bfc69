#include "ifsim/peaks.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ifsim {

std::vector<std::pair<int, Real>> detect_peaks(const PowerSpectrum& s, Real threshold) {
    if (!(threshold > 0)) throw std::invalid_argument("threshold must be positive");
    std::vector<std::pair<int, Real>> out;
    for (int f = 1; f <= s.sample_count / 2; ++f) {
        Real g = s.power_at(f);
        if (g >= threshold) out.emplace_back(f, g);
    }
    return out;
}

std::vector<PeakLabel> classify(long long f, const InterferometerSpec& spec, int max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be at least 1");
    const auto terms = enumerate_paths(spec);

    // identical combinations found on several paths collapse to one label
    std::map<std::map<std::string, int>, std::vector<int>> found;
    for (size_t pi = 0; pi < terms.size(); ++pi) {
        const auto& mods = terms[pi].modulators;
        const int m = static_cast<int>(mods.size());
        std::vector<int> idx(static_cast<size_t>(m), 0);
        std::function<void(int, int, long long)> walk = [&](int pos, int left, long long acc) {
            if (pos == m) {
                if (acc != f) return;
                std::map<std::string, int> coeffs;
                for (int i = 0; i < m; ++i)
                    if (idx[static_cast<size_t>(i)] != 0)
                        coeffs[mods[static_cast<size_t>(i)].label] = idx[static_cast<size_t>(i)];
                if (coeffs.empty()) return;  // all-zero index has order 0
                auto& paths = found[coeffs];
                if (paths.empty() || paths.back() != static_cast<int>(pi))
                    paths.push_back(static_cast<int>(pi));
                return;
            }
            for (int n = -left; n <= left; ++n) {
                idx[static_cast<size_t>(pos)] = n;
                walk(pos + 1, left - (n < 0 ? -n : n),
                     acc + n * static_cast<long long>(mods[static_cast<size_t>(pos)].frequency));
            }
        };
        walk(0, max_order, 0);
    }

    std::vector<PeakLabel> out;
    for (const auto& [coeffs, paths] : found) {
        PeakLabel label;
        label.frequency = f;
        label.coefficients = coeffs;
        label.total_order = 0;
        for (const auto& [_, n] : coeffs) label.total_order += n < 0 ? -n : n;
        label.path_indices = paths;
        out.push_back(std::move(label));
    }
    std::stable_sort(out.begin(), out.end(), [](const PeakLabel& a, const PeakLabel& b) {
        if (a.total_order != b.total_order) return a.total_order < b.total_order;
        return a.coefficients < b.coefficients;
    });
    return out;
}

PeakReport peak_report(const PowerSpectrum& s, const InterferometerSpec& spec, Real threshold,
                       int max_order) {
    PeakReport report;
    for (const auto& [f, power] : detect_peaks(s, threshold)) {
        PeakEntry entry;
        entry.frequency = f;
        entry.power = power;
        entry.labels = classify(f, spec, max_order);
        entry.classified = !entry.labels.empty();
        report.push_back(std::move(entry));
    }
    return report;
}

std::string label_string(const PeakLabel& label) {
    std::string out;
    for (const auto& [name, n] : label.coefficients) {
        out += (n < 0) ? '-' : '+';
        out += std::to_string(n < 0 ? -n : n);
        out += '*';
        out += name;
    }
    return out;
}

}  // namespace ifsim
