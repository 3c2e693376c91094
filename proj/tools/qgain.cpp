// qgain: exact rank and structure analysis for quaternion unit gain graphs.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "qgain/analysis.hpp"
#include "qgain/errors.hpp"
#include "qgain/fuzz.hpp"
#include "qgain/generate.hpp"
#include "qgain/graph.hpp"
#include "qgain/json_io.hpp"
#include "qgain/matrix.hpp"
#include "qgain/theorems.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qgain;

void configure_threads() {
#ifdef _OPENMP
    if (const char* env = std::getenv("QGAIN_THREADS")) {
        const int threads = std::atoi(env);
        if (threads > 0) omp_set_num_threads(threads);
    }
#endif
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GainGraph load_input_graph(const std::string& path, bool no_validate) {
    const RawGraph raw = parse_raw_graph(read_input(path));
    if (!no_validate) {
        const auto violations = validate(raw);
        if (!violations.empty()) {
            for (const auto& v : violations) std::cerr << "violation: " << v.message << "\n";
            throw precondition_error("input failed validation (" +
                                     std::to_string(violations.size()) + " violation(s))");
        }
    }
    return GainGraph::from_raw(raw, false);
}

RankSide parse_side(const std::string& name) {
    static const std::map<std::string, RankSide> sides{
        {"row-left", RankSide::row_left},
        {"row-right", RankSide::row_right},
        {"col-left", RankSide::col_left},
        {"col-right", RankSide::col_right},
    };
    return sides.at(name);
}

ordered_json gain_strings(const Quaternion& q) {
    const auto parts = q.to_strings();
    return ordered_json::array({parts[0], parts[1], parts[2], parts[3]});
}

int run_rank(const std::string& input, bool matrix_mode, const std::string& side_name,
             bool with_trace, bool want_core, bool want_connected_core, bool no_validate,
             bool json_out) {
    if (matrix_mode) {
        const QMatrix m = parse_matrix(read_input(input));
        const RankSide side = parse_side(side_name);
        const int r = rank(m, side);
        if (json_out) {
            ordered_json j;
            j["rows"] = m.rows();
            j["cols"] = m.cols();
            j["side"] = side_name;
            j["rank"] = r;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "rank (" << side_name << ") = " << r << "\n";
        }
        return 0;
    }
    const GainGraph g = load_input_graph(input, no_validate);
    const RankReport report = reduce_rank(g);
    const int n = g.vertex_count();
    ordered_json j;
    j["n"] = n;
    j["rank"] = report.rank;
    j["nullity"] = n - report.rank;
    if (!json_out) std::cout << "rank " << report.rank << "\nnullity " << n - report.rank << "\n";
    if (with_trace) {
        ordered_json steps = ordered_json::array();
        for (const auto& step : report.trace) {
            ordered_json js;
            js["kind"] = to_string(step.kind);
            js["vertices"] = step.vertices;
            js["contribution"] = step.contribution;
            js["note"] = step.note;
            steps.push_back(std::move(js));
            if (!json_out) {
                std::cout << "  " << to_string(step.kind) << " [";
                for (std::size_t i = 0; i < step.vertices.size(); ++i)
                    std::cout << (i ? " " : "") << step.vertices[i];
                std::cout << "] +" << step.contribution << " : " << step.note << "\n";
            }
        }
        j["trace"] = std::move(steps);
    }
    if (want_core || want_connected_core) {
        const auto core = extract_core(g, want_connected_core);
        j["core"] = core;
        j["core_connected"] = want_connected_core;
        if (!json_out) {
            std::cout << (want_connected_core ? "connected core:" : "core:");
            for (int v : core) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    if (json_out) std::cout << j.dump() << "\n";
    return 0;
}

std::vector<int> parse_cycle_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            out.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw parse_error("bad vertex '" + token + "' in cycle list");
        }
    }
    if (out.empty()) throw parse_error("empty cycle list");
    return out;
}

int run_classify(const std::string& input, const std::string& cycle_csv, int max_len,
                 bool no_validate, bool json_out) {
    const GainGraph g = load_input_graph(input, no_validate);
    std::vector<std::vector<int>> cycles;
    if (!cycle_csv.empty()) {
        cycles.push_back(parse_cycle_list(cycle_csv));
    } else {
        cycles = enumerate_cycles(g, max_len);
    }
    ordered_json out = ordered_json::array();
    for (const auto& cycle : cycles) {
        const Quaternion phi = cycle_gain(g, cycle);
        const CycleType type = classify_cycle(g, cycle);
        if (json_out) {
            ordered_json jc;
            jc["vertices"] = cycle;
            jc["length"] = cycle.size();
            jc["gain"] = gain_strings(phi);
            jc["type"] = type_number(type);
            out.push_back(std::move(jc));
        } else {
            std::cout << to_string(type) << "  length " << cycle.size() << "  gain "
                      << to_string(phi) << "  cycle";
            for (int v : cycle) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    if (json_out) {
        ordered_json j;
        j["cycles"] = std::move(out);
        std::cout << j.dump() << "\n";
    } else if (cycles.empty()) {
        std::cout << "no cycles of length <= " << max_len << "\n";
    }
    return 0;
}

int run_verify(const std::string& input, const std::string& theorem, bool no_validate,
               bool json_out) {
    const GainGraph g = load_input_graph(input, no_validate);
    if (theorem == "3.2" || theorem == "4.2") {
        const BoundVerdict v =
            theorem == "3.2" ? check_general_bound(g) : check_connected_bound(g);
        if (json_out) {
            ordered_json j;
            j["theorem"] = theorem;
            j["verdict"] = ordered_json::parse(to_json(v));
            std::cout << j.dump() << "\n";
        } else {
            std::cout << to_json(v) << "\n";
        }
        return v.holds ? 0 : 2;
    }
    if (theorem == "3.3" || theorem == "4.3") {
        const bool recognized =
            theorem == "3.3" ? is_extremal_general(g) : is_extremal_connected(g);
        const BoundVerdict v =
            theorem == "3.3" ? check_general_bound(g) : check_connected_bound(g);
        const bool consistent = recognized == v.tight;
        if (json_out) {
            ordered_json j;
            j["theorem"] = theorem;
            j["extremal"] = recognized;
            j["tight"] = v.tight;
            j["consistent"] = consistent;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (recognized ? "true" : "false") << "\n";
        }
        return consistent ? 0 : 2;
    }
    // L3.1: on a complete bipartite input, all C4s Type 1 <=> rank 2.
    const bool full = all_c4_type1(g, true);
    const bool reduced = all_c4_type1_reduced(g);
    const int r = graph_rank(g);
    const bool consistent = full == reduced && (r == 2) == full;
    if (json_out) {
        ordered_json j;
        j["theorem"] = "L3.1";
        j["all_c4_type1"] = full;
        j["rank"] = r;
        j["consistent"] = consistent;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "all_c4_type1 " << (full ? "true" : "false") << ", rank " << r << ", "
                  << (consistent ? "consistent" : "INCONSISTENT") << "\n";
    }
    return consistent ? 0 : 2;
}

int run_generate(const std::string& kind, int n, int a, int b, int delta, int max_delta,
                 std::uint64_t seed, const std::string& out_path) {
    GainGraph g;
    if (kind == "type1-cycle") {
        g = type1_cycle(n, seed);
    } else if (kind == "rank2-kab") {
        g = rank2_kab(a, b, seed);
    } else if (kind == "extremal-union") {
        g = extremal_union(n, delta, seed);
    } else if (kind == "pm-tree") {
        g = random_pm_tree(n, seed);
    } else if (kind == "connected") {
        g = random_connected(n, max_delta, seed);
    } else if (kind == "random") {
        g = random_graph(n, seed);
    } else if (kind == "tree") {
        g = random_tree(n, seed);
    } else {
        g = random_isolated_free(n, max_delta, seed);
    }
    const std::string text = serialize_graph(g);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw parse_error("cannot open " + out_path + " for writing");
        out << text;
    }
    return 0;
}

int run_fuzz_cmd(const std::string& suite, int count, std::uint64_t seed, int max_n,
                 const std::string& dump_dir, bool json_out) {
    FuzzOptions opt;
    opt.suite = suite;
    opt.count = count;
    opt.seed = seed;
    opt.max_n = max_n;
    const FuzzReport report = run_fuzz(opt);
    const auto dumped = report.ok() ? std::vector<std::string>{}
                                    : dump_failures(report, dump_dir);
    if (json_out) {
        ordered_json j;
        j["suite"] = suite;
        j["count"] = count;
        j["seed"] = seed;
        j["max_n"] = max_n;
        ordered_json props = ordered_json::array();
        for (const auto& t : report.tallies) {
            ordered_json jp;
            jp["property"] = t.property;
            jp["passed"] = t.passed;
            jp["failed"] = t.failed;
            props.push_back(std::move(jp));
        }
        j["properties"] = std::move(props);
        ordered_json fails = ordered_json::array();
        for (const auto& f : report.failures) {
            ordered_json jf;
            jf["property"] = f.property;
            jf["index"] = f.index;
            jf["detail"] = f.detail;
            fails.push_back(std::move(jf));
        }
        j["failures"] = std::move(fails);
        j["artifacts"] = dumped;
        j["ok"] = report.ok();
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& t : report.tallies)
            std::cout << t.property << ": " << t.passed << " passed, " << t.failed
                      << " failed\n";
        for (const auto& f : report.failures)
            std::cout << "FAIL " << f.property << "#" << f.index << ": " << f.detail << "\n";
        for (const auto& path : dumped) std::cout << "wrote " << path << "\n";
        std::cout << (report.ok() ? "all properties passed" : "violations found") << "\n";
    }
    return report.ok() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    configure_threads();
    CLI::App app{"exact rank and structure analysis for quaternion unit gain graphs"};
    app.require_subcommand(1);

    // rank
    auto* rank_cmd = app.add_subcommand("rank", "rank and nullity of a gain graph or matrix");
    std::string rank_input;
    std::string rank_side = "row-left";
    bool rank_matrix = false, rank_trace = false, rank_core = false, rank_ccore = false;
    bool rank_no_validate = false, rank_json = false;
    rank_cmd->add_option("input", rank_input, "graph JSON file, or - for stdin")->required();
    rank_cmd->add_option("--side", rank_side, "elimination side for --matrix mode")
        ->check(CLI::IsMember({"row-left", "row-right", "col-left", "col-right"}));
    rank_cmd->add_flag("--matrix", rank_matrix, "input is a raw quaternion matrix");
    rank_cmd->add_flag("--trace", rank_trace, "print the structural reduction trace");
    rank_cmd->add_flag("--core", rank_core, "print a rank-sized core vertex set");
    rank_cmd->add_flag("--connected-core", rank_ccore, "print a connected core vertex set");
    rank_cmd->add_flag("--no-validate", rank_no_validate, "skip input validation");
    rank_cmd->add_flag("--json", rank_json, "machine-readable output");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify cycles by gain type");
    std::string classify_input, classify_cycle;
    int classify_max_len = 8;
    bool classify_no_validate = false, classify_json = false;
    classify_cmd->add_option("input", classify_input, "graph JSON file, or - for stdin")
        ->required();
    classify_cmd->add_option("--cycle", classify_cycle, "comma-separated vertex list");
    classify_cmd->add_option("--max-len", classify_max_len,
                             "length bound for cycle enumeration");
    classify_cmd->add_flag("--no-validate", classify_no_validate, "skip input validation");
    classify_cmd->add_flag("--json", classify_json, "machine-readable output");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a bound or extremal recognizer");
    std::string verify_input, verify_theorem;
    bool verify_no_validate = false, verify_json = false;
    verify_cmd->add_option("input", verify_input, "graph JSON file, or - for stdin")
        ->required();
    verify_cmd->add_option("--theorem", verify_theorem, "which statement to check")
        ->required()
        ->check(CLI::IsMember({"3.2", "3.3", "4.2", "4.3", "L3.1"}));
    verify_cmd->add_flag("--no-validate", verify_no_validate, "skip input validation");
    verify_cmd->add_flag("--json", verify_json, "machine-readable output");

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "write a seeded instance as JSON");
    std::string gen_kind, gen_out;
    int gen_n = 8, gen_a = 2, gen_b = 2, gen_delta = 2, gen_max_delta = 4;
    std::uint64_t gen_seed = 1;
    generate_cmd->add_option("--kind", gen_kind, "instance family")
        ->required()
        ->check(CLI::IsMember({"type1-cycle", "rank2-kab", "extremal-union", "pm-tree",
                               "connected", "random", "tree", "isolated-free"}));
    generate_cmd->add_option("--n", gen_n, "vertex count");
    generate_cmd->add_option("--a", gen_a, "left side size (rank2-kab)");
    generate_cmd->add_option("--b", gen_b, "right side size (rank2-kab)");
    generate_cmd->add_option("--delta", gen_delta, "block degree (extremal-union)");
    generate_cmd->add_option("--max-delta", gen_max_delta, "degree cap");
    generate_cmd->add_option("--seed", gen_seed, "64-bit seed");
    generate_cmd->add_option("--out", gen_out, "output file (default stdout)");

    // fuzz
    auto* fuzz_cmd = app.add_subcommand("fuzz", "run seeded property suites");
    std::string fuzz_suite = "all", fuzz_dump_dir = ".";
    int fuzz_count = 100, fuzz_max_n = 12;
    std::uint64_t fuzz_seed = 1;
    bool fuzz_json = false;
    fuzz_cmd->add_option("--suite", fuzz_suite, "lemmas, bounds, or all")
        ->check(CLI::IsMember({"lemmas", "bounds", "all"}));
    fuzz_cmd->add_option("--count", fuzz_count, "instances per property");
    fuzz_cmd->add_option("--seed", fuzz_seed, "64-bit seed");
    fuzz_cmd->add_option("--max-n", fuzz_max_n, "largest instance size");
    fuzz_cmd->add_option("--dump-dir", fuzz_dump_dir, "where failure artifacts go");
    fuzz_cmd->add_flag("--json", fuzz_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*rank_cmd)
            return run_rank(rank_input, rank_matrix, rank_side, rank_trace, rank_core,
                            rank_ccore, rank_no_validate, rank_json);
        if (*classify_cmd)
            return run_classify(classify_input, classify_cycle, classify_max_len,
                                classify_no_validate, classify_json);
        if (*verify_cmd)
            return run_verify(verify_input, verify_theorem, verify_no_validate, verify_json);
        if (*generate_cmd)
            return run_generate(gen_kind, gen_n, gen_a, gen_b, gen_delta, gen_max_delta,
                                gen_seed, gen_out);
        if (*fuzz_cmd)
            return run_fuzz_cmd(fuzz_suite, fuzz_count, fuzz_seed, fuzz_max_n, fuzz_dump_dir,
                                fuzz_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
