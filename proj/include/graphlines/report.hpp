#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphlines/graph.hpp"

namespace graphlines {

/// Shared command configuration; every report echoes it so a run can be
/// reproduced from its own header.
struct RunConfig {
    uint64_t seed = 0;
    int threads = 1;
    std::string format = "json";  // json | csv | text
    long size_cap = 2000;         // line-family refused above this vertex count
    bool override_cap = false;
};

/// exit_code 0 means the command completed and every asserted property held.
/// 1: an asserted check failed. 2: bad input or usage.
struct CommandResult {
    int exit_code = 0;
    nlohmann::json report;
    std::string rendered;  // what the CLI prints, per config.format
};

/// Graphs from a file: graph6 (one per line, optional >>graph6<< header)
/// or a single edge-list graph.
std::vector<Graph> load_graph_file(const std::string& path);

CommandResult cmd_analyze(const std::string& input_path, const RunConfig& cfg);
CommandResult cmd_audit(const std::string& input_path, const RunConfig& cfg);

struct SearchOptions {
    int order = -1;           // built-in enumeration order
    std::string stream_path;  // external graph6 stream instead
    bool dedup = false;
    bool sweep = false;
    int max_n = -1;  // sweep bound; defaults to order
    std::string out_path;
};
CommandResult cmd_search(const SearchOptions& opt, const RunConfig& cfg);

struct ExplodeOptions {
    std::string input_path;
    int t = 0;
    std::string out_path;
};
CommandResult cmd_explode(const ExplodeOptions& opt, const RunConfig& cfg);

struct SampleOptions {
    std::string kind;  // "gnp" | "leftclique"
    int n = 0;
    double p = 0.5;     // gnp only
    int t = -1;         // left side size; -1 derives from c0
    double c0 = 5.0;    // t = ceil(c0 ln n) when t not given
    int attempts = 1;   // leftclique only
    std::string out_path;
};
CommandResult cmd_sample(const SampleOptions& opt, const RunConfig& cfg);

}  // namespace graphlines
