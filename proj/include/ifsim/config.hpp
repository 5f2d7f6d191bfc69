#ifndef IFSIM_CONFIG_HPP
#define IFSIM_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ifsim/network.hpp"

namespace ifsim {

// Line-oriented config format, one directive per line, '#' starts a
// comment, blank lines ignored:
//
//   paths <int>
//   inject <port>
//   detect <port>
//   bs <port_i> <port_j>
//   mod <label> <port> freq=<int> amp=<real>
//   phase <port> value=<real>
//
// The three header lines must each appear exactly once, before any stage
// line. Stage lines are chronological. amp and value are radians, with
// decimal or scientific notation.

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line),
          message_(message) {}

    int line() const { return line_; }  // 1-based
    const std::string& message() const { return message_; }

private:
    int line_;
    std::string message_;
};

/// Parsed document: the resolved spec plus the source line of each stage,
/// for diagnostics.
struct ConfigDocument {
    std::string text;
    InterferometerSpec spec;
    std::vector<int> stage_lines;  // 1-based source line per stage
};

ConfigDocument parse_document(const std::string& text);  // throws ParseError
InterferometerSpec parse(const std::string& text);       // throws ParseError

/// Canonical text form: header lines, then stages in chronological order.
/// Reals are printed with 17 significant digits so a round-trip restores
/// every double bit-exactly. Throws std::invalid_argument on an invalid
/// spec (first violation in the message).
std::string serialize(const InterferometerSpec& spec);

}  // namespace ifsim

#endif
