#pragma once

// Plain-text formats. Blank lines and everything after '#' are ignored.
//
//   graph            "n m", then m lines "i j" with 0 <= i, j < n
//   coding sequence  "n", then one code per line as n-1 characters of 0/1
//   matrix           "r m", then r lines of m characters of 0/1
//
// Parse failures throw ParseError carrying the 1-based line number.

#include <filesystem>
#include <iosfwd>

#include "segcode/coding.hpp"
#include "segcode/gf2.hpp"
#include "segcode/graph.hpp"

namespace segcode::io {

Graph parse_graph(std::istream& in);
CodingSequence parse_coding_sequence(std::istream& in);
GF2Matrix parse_matrix(std::istream& in);

/// Opens path and parses it; a missing file is a ParseError at line 0.
Graph read_graph(const std::filesystem::path& path);
CodingSequence read_coding_sequence(const std::filesystem::path& path);
GF2Matrix read_matrix(const std::filesystem::path& path);

void write_graph(std::ostream& out, const Graph& g);
/// With with_keys each code line carries its σ key as a "# (hi,lo)" comment.
void write_coding_sequence(std::ostream& out, const CodingSequence& s, bool with_keys = false);
void write_matrix(std::ostream& out, const GF2Matrix& m);

}  // namespace segcode::io
