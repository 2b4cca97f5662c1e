#pragma once

#include "rch/diagram.hpp"

#include <iosfwd>
#include <stdexcept>
#include <variant>

namespace rch {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

using ParsedDiagram = std::variant<RibbonDiagram, PMDiagram>;

// Line-oriented diagram format, `#` starts a comment:
//
//   graph <name>
//   edge <eid> <v> <v> [sign=+|-] [matched]
//   vertex <vid>: <eid>.<0|1> , ...
//   circles <count>
//
// Every half-edge must be placed exactly once; `matched` edges, when any
// appear, must form a perfect matching. Signs default to +.
ParsedDiagram parse_diagram(const std::string& text);
ParsedDiagram parse_diagram_file(const std::string& path);

// Inverse of the parser, in a normalized order.
std::string serialize(const RibbonDiagram& d);
std::string serialize(const PMDiagram& pm);

inline const RibbonDiagram& underlying(const ParsedDiagram& p) {
    if (auto* d = std::get_if<RibbonDiagram>(&p)) return *d;
    return std::get<PMDiagram>(p).d;
}

// The diagram as a PM diagram; a plain ribbon diagram has no matching and is
// rejected unless allowEmpty (vertex-free circles only) holds.
PMDiagram as_pm(const ParsedDiagram& p);

}  // namespace rch
