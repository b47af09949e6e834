#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wmsudoku {

/// Everything that shapes one tournament run. Defaults reproduce the
/// reference experimental setup: 19 agents with Mc = 9, 11, ..., 45 out of 54
/// memory units and nine rounds of decreasing clue count.
struct TournamentConfig {
    int total_memory = 54;
    int mc_min = 9;
    int mc_max = 45;
    int mc_step = 2;
    std::vector<int> rounds{76, 74, 71, 67, 62, 56, 49, 41, 32};
    int max_steps = 10;
    double epsilon = 1e-9;
    int stagnation_window = 5;
    int max_replays = 50;
    bool observe_empty = false;
    std::map<int, std::string> fixtures;  // round number (1-based) -> grid file

    friend bool operator==(const TournamentConfig&, const TournamentConfig&) = default;
};

struct RunConfig {
    TournamentConfig tournament;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::string out_dir = "runs";
};

/// Throws ConfigError naming the violated invariant.
void validate(const TournamentConfig& cfg);

/// Applies one key=value setting. Throws ConfigError on unknown keys or bad values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Flat key=value text; '#' starts a comment line, blank lines are skipped.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Resolved tournament keys in a fixed order; stable text for snapshots and log headers.
std::map<std::string, std::string> tournament_settings(const TournamentConfig& cfg);

/// Full snapshot including seeds and out_dir; parse_config of it rebuilds cfg.
std::string snapshot(const RunConfig& cfg);

/// Shortest text that parses back to the same double.
std::string format_double(double v);
/// 12 significant digits, '.' separator, independent of locale.
std::string format_double12(double v);

}  // namespace wmsudoku
