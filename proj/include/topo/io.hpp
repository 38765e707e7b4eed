#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "topo/embed.hpp"
#include "topo/handles.hpp"
#include "topo/strata.hpp"

namespace topo::io {

/// Syntax or semantic error in a complex file, with 1-based position.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line(line),
          column(column) {}

    int line;
    int column;
};

/// Contents of a complex file: a labeled simplicial complex plus optional
/// stratification, handle specification, rational coordinates, and an
/// expected-invariant block.
struct ParsedFile {
    SimplicialComplex complex;
    std::optional<Stratification> strata;
    std::optional<HandleSpec> handles;
    std::map<int, RatPoint> coords;
    std::map<std::string, std::vector<std::string>> expect;
};

/// Parse the line-oriented text format:
///
///   TOPO COMPLEX 1
///   DIM <d>
///   VERTICES          ids, whitespace separated
///   SIMPLICES <d>     one simplex per line; every face must be listed too
///   LABELS            <name>: a b c, d e f
///   STRATA            STRATUM / TRIANGLES / UP subsections per stratum
///   HANDLESPEC        one event per line: <index> [attach positions]
///   COORDS            <vertex> <x> <y> <z> with rational entries
///   EXPECT            <key> <values...>
///
/// '#' starts a comment.  Sections are optional and end at the next section
/// keyword.  Throws parse_error with the offending position.
ParsedFile parse(const std::string& text);

/// Canonical text form: sorted vertices, simplices, label names, coordinate
/// rows and expectation keys.  serialize(parse(f)) is a fixed point.
std::string serialize(const ParsedFile& f);

/// OFF mesh text for a triangle set with coordinates; vertices are emitted
/// in sorted id order, so the output is byte-stable.
std::string to_off(const std::map<int, Point>& coords, const SimplexSet& triangles);

}  // namespace topo::io
