#include "ifsim/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>

namespace ifsim {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::optional<int> to_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    errno = 0;
    long v = std::strtol(s.c_str(), nullptr, 10);
    if (errno != 0 || v < -2147483647L || v > 2147483647L) return std::nullopt;
    return static_cast<int>(v);
}

std::optional<double> to_real(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const char* begin = s.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    if (errno != 0 || end != begin + s.size()) return std::nullopt;
    return v;
}

// "key=value" -> value, or nullopt when the key does not match.
std::optional<std::string> key_value(const std::string& tok, const std::string& key) {
    if (tok.size() <= key.size() + 1) return std::nullopt;
    if (tok.compare(0, key.size(), key) != 0 || tok[key.size()] != '=') return std::nullopt;
    return tok.substr(key.size() + 1);
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ConfigDocument parse_document(const std::string& text) {
    ConfigDocument doc;
    doc.text = text;
    InterferometerSpec& spec = doc.spec;

    std::optional<int> paths, inject, detect;
    int paths_line = 0, inject_line = 0, detect_line = 0;
    bool saw_stage = false;
    std::set<std::string> labels;
    int line_no = 0;
    int last_line = 1;

    auto require_headers = [&](int at_line) {
        if (!paths) throw ParseError(at_line, "missing header 'paths'");
        if (!inject) throw ParseError(at_line, "missing header 'inject'");
        if (!detect) throw ParseError(at_line, "missing header 'detect'");
    };
    auto check_port = [&](int port, int at_line) {
        if (port < 1 || port > *paths)
            throw ParseError(at_line, "port " + std::to_string(port) + " out of range");
    };

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        last_line = line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto toks = split_tokens(raw);
        if (toks.empty()) continue;
        const std::string& dir = toks[0];

        if (dir == "paths" || dir == "inject" || dir == "detect") {
            if (saw_stage) throw ParseError(line_no, "header '" + dir + "' after a stage line");
            if (toks.size() != 2)
                throw ParseError(line_no, "expected '" + dir + " <int>'");
            auto v = to_int(toks[1]);
            if (!v) throw ParseError(line_no, "'" + dir + "' needs an integer, got '" + toks[1] + "'");
            auto& slot = dir == "paths" ? paths : dir == "inject" ? inject : detect;
            auto& slot_line = dir == "paths" ? paths_line : dir == "inject" ? inject_line : detect_line;
            if (slot) throw ParseError(line_no, "duplicate header '" + dir + "'");
            slot = *v;
            slot_line = line_no;
            continue;
        }

        // everything else is a stage line; headers must be complete
        require_headers(line_no);
        if (!saw_stage) {
            // validate header ports once the path count is known
            check_port(*inject, inject_line);
            check_port(*detect, detect_line);
            saw_stage = true;
        }

        if (dir == "bs") {
            if (toks.size() != 3) throw ParseError(line_no, "expected 'bs <port_i> <port_j>'");
            auto a = to_int(toks[1]), b = to_int(toks[2]);
            if (!a || !b) throw ParseError(line_no, "beamsplitter ports must be integers");
            check_port(*a, line_no);
            check_port(*b, line_no);
            if (*a == *b) throw ParseError(line_no, "beamsplitter ports must differ");
            spec.stages.push_back(make_beamsplitter(*a, *b));
        } else if (dir == "mod") {
            if (toks.size() != 5)
                throw ParseError(line_no, "expected 'mod <label> <port> freq=<int> amp=<real>'");
            const std::string& label = toks[1];
            auto port = to_int(toks[2]);
            if (!port) throw ParseError(line_no, "mirror port must be an integer");
            check_port(*port, line_no);
            auto freq_s = key_value(toks[3], "freq");
            auto amp_s = key_value(toks[4], "amp");
            if (!freq_s) throw ParseError(line_no, "expected freq=<int>");
            if (!amp_s) throw ParseError(line_no, "expected amp=<real>");
            auto freq = to_int(*freq_s);
            if (!freq) throw ParseError(line_no, "non-integer freq '" + *freq_s + "'");
            if (*freq < 1) throw ParseError(line_no, "frequency must be a positive integer");
            auto amp = to_real(*amp_s);
            if (!amp) throw ParseError(line_no, "malformed amp '" + *amp_s + "'");
            if (!labels.insert(label).second)
                throw ParseError(line_no, "duplicate modulator label '" + label + "'");
            spec.stages.push_back(Mirror{{label, *port, *freq, *amp}});
        } else if (dir == "phase") {
            if (toks.size() != 3) throw ParseError(line_no, "expected 'phase <port> value=<real>'");
            auto port = to_int(toks[1]);
            if (!port) throw ParseError(line_no, "phase port must be an integer");
            check_port(*port, line_no);
            auto value_s = key_value(toks[2], "value");
            if (!value_s) throw ParseError(line_no, "expected value=<real>");
            auto value = to_real(*value_s);
            if (!value) throw ParseError(line_no, "malformed value '" + *value_s + "'");
            spec.stages.push_back(StaticPhase{*port, *value});
        } else {
            throw ParseError(line_no, "unknown directive '" + dir + "'");
        }
        doc.stage_lines.push_back(line_no);
    }

    require_headers(last_line);
    if (!saw_stage) {
        check_port(*inject, inject_line);
        check_port(*detect, detect_line);
    }
    spec.path_count = *paths;
    spec.injection_port = *inject;
    spec.detection_port = *detect;
    return doc;
}

InterferometerSpec parse(const std::string& text) { return parse_document(text).spec; }

std::string serialize(const InterferometerSpec& spec) {
    auto violations = validate(spec);
    if (!violations.empty())
        throw std::invalid_argument("cannot serialize invalid spec: " + violations.front());

    std::string out;
    out += "paths " + std::to_string(spec.path_count) + "\n";
    out += "inject " + std::to_string(spec.injection_port) + "\n";
    out += "detect " + std::to_string(spec.detection_port) + "\n";
    for (const Stage& s : spec.stages) {
        if (const auto* bs = std::get_if<Beamsplitter>(&s)) {
            int lo = bs->port_i, hi = bs->port_j;
            if (lo > hi) std::swap(lo, hi);
            out += "bs " + std::to_string(lo) + " " + std::to_string(hi) + "\n";
        } else if (const auto* mi = std::get_if<Mirror>(&s)) {
            const Modulator& m = mi->modulator;
            out += "mod " + m.label + " " + std::to_string(m.port) + " freq=" +
                   std::to_string(m.frequency) + " amp=" + fmt17(m.amplitude) + "\n";
        } else {
            const auto& sp = std::get<StaticPhase>(s);
            out += "phase " + std::to_string(sp.port) + " value=" + fmt17(sp.phase) + "\n";
        }
    }
    return out;
}

}  // namespace ifsim
