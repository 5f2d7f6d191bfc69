// Command-line front end: run interferometer configs or the built-in
// preset, emit spectra and peak reports as CSV, and gate the numeric
// engine against the analytic line spectrum.
//
// Exit codes: 0 success (compare: within tolerance), 1 compare failure,
// 2 usage or config errors.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ifsim/config.hpp"
#include "ifsim/csv.hpp"

namespace {

struct CommonOpts {
    std::string preset;
    std::string config_path;
    double detune = 0.0;
    int samples = 4096;
    std::string band;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_band) {
    cmd->add_option("--preset", opts.preset, "built-in layout name (danan)");
    cmd->add_option("--config", opts.config_path, "config file path");
    cmd->add_option("--detune", opts.detune,
                    "static detune phase in radians (preset only)");
    cmd->add_option("--samples", opts.samples, "samples per period")->capture_default_str();
    if (with_band) cmd->add_option("--band", opts.band, "inclusive frequency band lo:hi");
    cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
}

int fail(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::optional<ifsim::InterferometerSpec> load_spec(const CommonOpts& opts, int& rc) {
    const bool has_preset = !opts.preset.empty();
    const bool has_config = !opts.config_path.empty();
    if (has_preset == has_config) {
        rc = fail("exactly one of --preset or --config is required");
        return std::nullopt;
    }
    if (has_preset) {
        if (opts.preset != "danan") {
            rc = fail("unknown preset '" + opts.preset + "'");
            return std::nullopt;
        }
        return ifsim::danan_preset(opts.detune);
    }
    if (opts.detune != 0.0) {
        rc = fail("--detune only applies to --preset");
        return std::nullopt;
    }
    std::ifstream in(opts.config_path, std::ios::binary);
    if (!in) {
        rc = fail("cannot open '" + opts.config_path + "'");
        return std::nullopt;
    }
    std::ostringstream text;
    text << in.rdbuf();
    ifsim::InterferometerSpec spec;
    try {
        spec = ifsim::parse(text.str());
    } catch (const ifsim::ParseError& e) {
        rc = fail(opts.config_path + ": " + e.what());
        return std::nullopt;
    }
    auto violations = ifsim::validate(spec);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "error: " << opts.config_path << ": " << v << "\n";
        rc = 2;
        return std::nullopt;
    }
    return spec;
}

bool parse_band(const std::string& text, int& lo, int& hi) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    try {
        size_t used = 0;
        lo = std::stoi(text.substr(0, colon), &used);
        if (used != colon) return false;
        std::string rest = text.substr(colon + 1);
        hi = std::stoi(rest, &used);
        if (used != rest.size()) return false;
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

int write_output(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) return fail("cannot write '" + opts.out_path + "'");
    out << text;
    return out ? 0 : fail("cannot write '" + opts.out_path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-modulated interferometer simulator"};
    app.require_subcommand(1);

    CommonOpts spectrum_opts, analytic_opts, compare_opts, peaks_opts;
    int analytic_order = 4, compare_order = 4, peaks_order = 4;
    double threshold = 1e-6;
    std::string preset_name;
    double preset_detune = 0.0;
    std::string preset_out;

    auto* cmd_spectrum = app.add_subcommand("spectrum", "numeric power spectrum as CSV (f,G)");
    add_common(cmd_spectrum, spectrum_opts, true);

    auto* cmd_analytic =
        app.add_subcommand("analytic", "analytic line spectrum as CSV (f,re,im,G)");
    add_common(cmd_analytic, analytic_opts, true);
    cmd_analytic->add_option("--max-order", analytic_order, "sideband order cutoff")
        ->capture_default_str();

    auto* cmd_compare =
        app.add_subcommand("compare", "gate the numeric spectrum against the analytic one");
    add_common(cmd_compare, compare_opts, true);
    cmd_compare->add_option("--max-order", compare_order, "sideband order cutoff")
        ->capture_default_str();

    auto* cmd_peaks = app.add_subcommand("peaks", "detected peaks with integer-combination labels");
    add_common(cmd_peaks, peaks_opts, false);
    cmd_peaks->add_option("--threshold", threshold, "detection threshold on G")
        ->capture_default_str();
    cmd_peaks->add_option("--max-order", peaks_order, "classification order bound")
        ->capture_default_str();

    auto* cmd_preset = app.add_subcommand("preset", "print a built-in layout as config text");
    cmd_preset->add_option("name", preset_name, "preset name")->required();
    cmd_preset->add_option("--detune", preset_detune, "static detune phase in radians");
    cmd_preset->add_option("--out", preset_out, "write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_preset->parsed()) {
            if (preset_name != "danan") return fail("unknown preset '" + preset_name + "'");
            CommonOpts opts;
            opts.out_path = preset_out;
            return write_output(opts, ifsim::serialize(ifsim::danan_preset(preset_detune)));
        }

        if (cmd_spectrum->parsed()) {
            int rc = 0;
            auto spec = load_spec(spectrum_opts, rc);
            if (!spec) return rc;
            if (spectrum_opts.samples < 2) return fail("--samples must be at least 2");
            auto spectrum = ifsim::dft_spectrum(ifsim::trace(*spec, spectrum_opts.samples));
            int lo = 0, hi = spectrum.sample_count / 2;
            if (!spectrum_opts.band.empty() && !parse_band(spectrum_opts.band, lo, hi))
                return fail("invalid band '" + spectrum_opts.band + "'");
            std::string csv;
            try {
                csv = ifsim::spectrum_csv(spectrum, lo, hi);
            } catch (const std::invalid_argument& e) {
                return fail(std::string("invalid band: ") + e.what());
            }
            return write_output(spectrum_opts, csv);
        }

        if (cmd_analytic->parsed()) {
            int rc = 0;
            auto spec = load_spec(analytic_opts, rc);
            if (!spec) return rc;
            int lo = 0, hi = 1000;
            if (!analytic_opts.band.empty() && !parse_band(analytic_opts.band, lo, hi))
                return fail("invalid band '" + analytic_opts.band + "'");
            if (lo < 0) return fail("invalid band: negative frequency");
            auto lines = ifsim::line_spectrum(ifsim::enumerate_paths(*spec), analytic_order);
            return write_output(analytic_opts, ifsim::analytic_csv(lines, lo, hi));
        }

        if (cmd_compare->parsed()) {
            int rc = 0;
            auto spec = load_spec(compare_opts, rc);
            if (!spec) return rc;
            if (compare_opts.samples < 2) return fail("--samples must be at least 2");
            auto spectrum = ifsim::dft_spectrum(ifsim::trace(*spec, compare_opts.samples));
            auto lines = ifsim::line_spectrum(ifsim::enumerate_paths(*spec), compare_order);
            int lo = 0, hi = 1000;
            if (!compare_opts.band.empty() && !parse_band(compare_opts.band, lo, hi))
                return fail("invalid band '" + compare_opts.band + "'");
            if (lo < 0) return fail("invalid band: negative frequency");
            hi = std::min(hi, spectrum.sample_count / 2);
            lo = std::min(lo, hi);

            struct Row { int f; ifsim::Real numeric, analytic, diff; };
            std::vector<Row> rows;
            ifsim::Real worst = 0;
            for (int f = lo; f <= hi; ++f) {
                ifsim::Real num = spectrum.power_at(f);
                ifsim::Real ana = lines.power(f);
                ifsim::Real diff = fabsl(num - ana);
                rows.push_back({f, num, ana, diff});
                worst = std::max(worst, diff);
            }
            std::stable_sort(rows.begin(), rows.end(),
                             [](const Row& a, const Row& b) { return a.diff > b.diff; });
            std::string report;
            report += "band " + std::to_string(lo) + ":" + std::to_string(hi) + " samples " +
                      std::to_string(compare_opts.samples) + " cutoff " +
                      std::to_string(compare_order) + "\n";
            report += "max discrepancy " + ifsim::format_real(worst) + "\n";
            report += "worst bins:\n";
            for (size_t i = 0; i < rows.size() && i < 10; ++i)
                report += "  f=" + std::to_string(rows[i].f) + " numeric=" +
                          ifsim::format_real(rows[i].numeric) + " analytic=" +
                          ifsim::format_real(rows[i].analytic) + " diff=" +
                          ifsim::format_real(rows[i].diff) + "\n";
            const ifsim::Real tol = 1e-15L;
            const bool ok = worst <= tol;
            report += ok ? "PASS (tolerance 1.0e-15)\n" : "FAIL (tolerance 1.0e-15)\n";
            int wrc = write_output(compare_opts, report);
            if (wrc != 0) return wrc;
            return ok ? 0 : 1;
        }

        if (cmd_peaks->parsed()) {
            int rc = 0;
            auto spec = load_spec(peaks_opts, rc);
            if (!spec) return rc;
            if (peaks_opts.samples < 2) return fail("--samples must be at least 2");
            if (!(threshold > 0)) return fail("--threshold must be positive");
            auto spectrum = ifsim::dft_spectrum(ifsim::trace(*spec, peaks_opts.samples));
            auto report = ifsim::peak_report(spectrum, *spec, threshold, peaks_order);
            return write_output(peaks_opts, ifsim::peaks_csv(report));
        }
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return 2;
}
