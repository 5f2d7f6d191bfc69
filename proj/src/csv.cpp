#include "ifsim/csv.hpp"

#include <cstdio>

namespace ifsim {

std::string format_real(Real x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16Le", x);
    return buf;
}

std::string spectrum_csv(const PowerSpectrum& s, int f_lo, int f_hi) {
    std::string out = "f,G\n";
    for (const auto& [f, g] : band(s, f_lo, f_hi))
        out += std::to_string(f) + "," + format_real(g) + "\n";
    return out;
}

std::string analytic_csv(const AnalyticSpectrum& s, int f_lo, int f_hi) {
    std::string out = "f,re,im,G\n";
    for (int f = f_lo; f <= f_hi; ++f) {
        Complex a = s.amplitude(f);
        out += std::to_string(f) + "," + format_real(a.real()) + "," + format_real(a.imag()) +
               "," + format_real(std::norm(a)) + "\n";
    }
    return out;
}

std::string peaks_csv(const PeakReport& report) {
    std::string out = "f,power,order,label\n";
    for (const PeakEntry& entry : report) {
        const std::string prefix = std::to_string(entry.frequency) + "," + format_real(entry.power);
        if (!entry.classified) {
            out += prefix + ",0,?\n";
            continue;
        }
        for (const PeakLabel& label : entry.labels)
            out += prefix + "," + std::to_string(label.total_order) + "," + label_string(label) + "\n";
    }
    return out;
}

}  // namespace ifsim
