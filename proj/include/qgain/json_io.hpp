#ifndef QGAIN_JSON_IO_HPP
#define QGAIN_JSON_IO_HPP

#include <string>

#include "qgain/graph.hpp"
#include "qgain/matrix.hpp"

namespace qgain {

/// Fixed-format serialization: {"n": ..., "edges": [{"u", "v", "gain"}...]}
/// with gains as four exact rational strings for the orientation u -> v and
/// an optional trailing "names" array. Output is byte-stable: the same graph
/// always serializes to the same text.
std::string serialize_graph(const GainGraph& g);

/// Parses the graph format without enforcing semantic invariants.
/// Throws parse_error on malformed JSON or wrong shapes.
RawGraph parse_raw_graph(const std::string& text);

/// Parses and, unless enforce_valid is false, rejects any validate() finding.
GainGraph parse_graph(const std::string& text, bool enforce_valid = true);

GainGraph load_graph_file(const std::string& path, bool enforce_valid = true);
void save_graph_file(const GainGraph& g, const std::string& path);

/// Raw matrix mode: a JSON array of rows, each row an array of entries, each
/// entry an array of four rational strings [w, x, y, z].
QMatrix parse_matrix(const std::string& text);
std::string serialize_matrix(const QMatrix& m);

} // namespace qgain

#endif
