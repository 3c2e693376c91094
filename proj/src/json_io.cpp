#include "qgain/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qgain/errors.hpp"

namespace qgain {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json gain_json(const Quaternion& q) {
    const auto parts = q.to_strings();
    return ordered_json::array({parts[0], parts[1], parts[2], parts[3]});
}

Rational component_from(const ordered_json& j, const char* where) {
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw parse_error(std::string(where) + ": gain component must be a rational string");
}

Quaternion gain_from(const ordered_json& j, const char* where) {
    if (!j.is_array() || j.size() != 4)
        throw parse_error(std::string(where) + ": gain must be an array of 4 components");
    return Quaternion(component_from(j[0], where), component_from(j[1], where),
                      component_from(j[2], where), component_from(j[3], where));
}

int int_from(const ordered_json& j, const char* where) {
    if (!j.is_number_integer())
        throw parse_error(std::string(where) + ": expected an integer");
    return j.get<int>();
}

ordered_json parse_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

std::string serialize_graph(const GainGraph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = ordered_json::array();
    for (const auto& e : g.edges()) {
        ordered_json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["gain"] = gain_json(e.gain);
        j["edges"].push_back(std::move(je));
    }
    if (!g.names().empty()) j["names"] = g.names();
    return j.dump(2) + "\n";
}

RawGraph parse_raw_graph(const std::string& text) {
    const ordered_json j = parse_text(text);
    if (!j.is_object()) throw parse_error("graph: top level must be an object");
    if (!j.contains("n")) throw parse_error("graph: missing \"n\"");
    if (!j.contains("edges")) throw parse_error("graph: missing \"edges\"");
    RawGraph raw;
    raw.n = int_from(j["n"], "graph.n");
    if (raw.n < 0) throw parse_error("graph.n: must be nonnegative");
    if (!j["edges"].is_array()) throw parse_error("graph.edges: must be an array");
    for (const auto& je : j["edges"]) {
        if (!je.is_object() || !je.contains("u") || !je.contains("v") || !je.contains("gain"))
            throw parse_error("graph.edges: each edge needs \"u\", \"v\", \"gain\"");
        OrientedGain e;
        e.u = int_from(je["u"], "edge.u");
        e.v = int_from(je["v"], "edge.v");
        e.gain = gain_from(je["gain"], "edge.gain");
        raw.entries.push_back(std::move(e));
    }
    if (j.contains("names")) {
        if (!j["names"].is_array()) throw parse_error("graph.names: must be an array");
        for (const auto& name : j["names"]) {
            if (!name.is_string()) throw parse_error("graph.names: entries must be strings");
            raw.names.push_back(name.get<std::string>());
        }
    }
    return raw;
}

GainGraph parse_graph(const std::string& text, bool enforce_valid) {
    return GainGraph::from_raw(parse_raw_graph(text), enforce_valid);
}

GainGraph load_graph_file(const std::string& path, bool enforce_valid) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), enforce_valid);
}

void save_graph_file(const GainGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    out << serialize_graph(g);
}

QMatrix parse_matrix(const std::string& text) {
    const ordered_json j = parse_text(text);
    if (!j.is_array()) throw parse_error("matrix: top level must be an array of rows");
    const int rows = static_cast<int>(j.size());
    int cols = -1;
    QMatrix m;
    for (int r = 0; r < rows; ++r) {
        const auto& jr = j[r];
        if (!jr.is_array()) throw parse_error("matrix: each row must be an array");
        if (cols < 0) {
            cols = static_cast<int>(jr.size());
            m = QMatrix(rows, cols);
        } else if (static_cast<int>(jr.size()) != cols) {
            throw parse_error("matrix: ragged rows");
        }
        for (int c = 0; c < cols; ++c) m(r, c) = gain_from(jr[c], "matrix entry");
    }
    return m;
}

std::string serialize_matrix(const QMatrix& m) {
    ordered_json j = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json jr = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) jr.push_back(gain_json(m(r, c)));
        j.push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

} // namespace qgain
