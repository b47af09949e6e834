// wmsudoku: generate puzzles, run working-memory tournaments, aggregate reports.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 runtime failure.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "wmsudoku/config.hpp"
#include "wmsudoku/error.hpp"
#include "wmsudoku/metrics.hpp"
#include "wmsudoku/solver.hpp"
#include "wmsudoku/tournament.hpp"
#include "wmsudoku/tournament_log.hpp"

namespace fs = std::filesystem;
using namespace wmsudoku;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::ConfigError:
    case ErrorCode::BadArgs:
    case ErrorCode::BadRange:
    case ErrorCode::BadSkillCode:
        return kExitUsage;
    default:
        return kExitRuntime;
    }
}

void write_text(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
    out << body;
    if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + path.string());
}

int cmd_generate(int clues, std::uint64_t seed, const std::string& out) {
    const Grid g = generate_puzzle(clues, seed);
    write_text(out, serialize_grid(g) + "\n");
    std::cout << "wrote " << out << ": " << g.filled_count() << " clues, "
              << (g.consistent() ? "consistent" : "INCONSISTENT") << ", solutions "
              << (count_solutions(g, 2) >= 2 ? ">=2" : std::to_string(count_solutions(g, 2))) << "\n";
    return 0;
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& overrides, const std::string& seeds,
            const std::string& out, int jobs) {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
    for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ConfigError, "--set expects key=value, got '" + kv + "'");
        apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!seeds.empty()) apply_setting(cfg, "seeds", seeds);
    if (!out.empty()) cfg.out_dir = out;
    validate(cfg.tournament);

    const fs::path runs = fs::path(cfg.out_dir) / "runs";
    std::atomic<std::size_t> next{0};
    std::mutex io;
    std::exception_ptr failure;
    auto worker = [&] {
        for (std::size_t i = next++; i < cfg.seeds.size(); i = next++) {
            try {
                const std::uint64_t seed = cfg.seeds[i];
                const TournamentLog log = run_tournament(cfg.tournament, seed);
                const fs::path dir = runs / ("seed-" + std::to_string(seed));
                fs::create_directories(dir);
                write_text(dir / "tournament.log", serialize_log(log));
                RunConfig single = cfg;
                single.seeds = {seed};
                write_text(dir / "config.snapshot", snapshot(single));
                std::lock_guard lock(io);
                std::cout << "seed " << seed << ": " << log.rounds.size() << " rounds ->" << (dir / "tournament.log").string()
                          << "\n";
            } catch (...) {
                std::lock_guard lock(io);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const int n = std::clamp(jobs, 1, static_cast<int>(cfg.seeds.size()));
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return 0;
}

void print_top3(const char* title, const std::vector<int>& order, auto value_of) {
    std::cout << title << ":";
    for (std::size_t i = 0; i < 3 && i < order.size(); ++i) {
        const Skill& s = skill_by_code(order[i]);
        std::cout << "  " << (i + 1) << ". skill " << s.code << " (" << s.name() << ") " << value_of(s.code);
    }
    std::cout << "\n";
}

int cmd_report(const std::string& runs_dir, const std::string& out_dir, const std::string& attribution, int skill) {
    std::vector<fs::path> paths;
    if (fs::is_directory(runs_dir)) {
        for (const auto& entry : fs::recursive_directory_iterator(runs_dir)) {
            if (entry.is_regular_file() && entry.path().filename() == "tournament.log") paths.push_back(entry.path());
        }
    }
    if (paths.empty()) {
        throw Error(ErrorCode::EmptyInput, "no tournament.log under " + runs_dir +
                                               " (run `wmsudoku run --out DIR` first and pass DIR/runs)");
    }
    std::sort(paths.begin(), paths.end());
    std::vector<TournamentLog> logs;
    for (const auto& p : paths) logs.push_back(load_log(p.string()));
    check_same_shape(logs);

    ReportTables tables;
    tables.popularity = skill_popularity(logs);
    tables.effectiveness = skill_effectiveness(
        logs, attribution == "all" ? Attribution::AllAgents : Attribution::TopScorers);
    const int designated = skill > 0 ? skill : top_skill(tables.effectiveness);
    tables.usage_by_memory = skill_usage_by_memory(logs, designated);
    tables.scores = score_matrix(logs);

    fs::create_directories(out_dir);
    for (const auto& p : write_tables(tables, out_dir)) std::cout << "wrote " << p.string() << "\n";
    print_top3("popularity", ranking(tables.popularity.count),
               [&](int code) { return std::to_string(tables.popularity.count[code - 1]); });
    print_top3("effectiveness", ranking(tables.effectiveness.mass),
               [&](int code) { return format_double12(tables.effectiveness.mass[code - 1]); });
    std::cout << "usage_by_memory.csv tracks skill " << designated << " (" << skill_by_code(designated).name() << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Working-memory Sudoku agent society simulator"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Write one seeded puzzle");
    int clues = 0;
    std::uint64_t seed = 1;
    std::string gen_out;
    gen->add_option("--clues", clues, "Number of filled cells (17-81)")->required();
    gen->add_option("--seed", seed, "Generator seed");
    gen->add_option("--out", gen_out, "Output grid file")->required();

    auto* run = app.add_subcommand("run", "Run one tournament per seed");
    std::string config_path, seeds, run_out;
    std::vector<std::string> overrides;
    int jobs = 1;
    run->add_option("--config", config_path, "key=value configuration file");
    run->add_option("--set", overrides, "Override one key (key=value), repeatable");
    run->add_option("--seeds", seeds, "Comma list or a..b range of seeds");
    run->add_option("--out", run_out, "Output directory (runs/seed-<s>/ is created inside)");
    run->add_option("--jobs", jobs, "Seeds run in parallel");

    auto* rep = app.add_subcommand("report", "Aggregate tournament logs into CSV tables");
    std::string runs_dir, report_out = "report", attribution = "top";
    int skill = 0;
    rep->add_option("--runs", runs_dir, "Directory searched for tournament.log files")->required();
    rep->add_option("--out", report_out, "Directory for the CSV tables");
    rep->add_option("--attribution", attribution, "Effectiveness attribution: top or all")
        ->check(CLI::IsMember({"top", "all"}));
    rep->add_option("--skill", skill, "Skill code tracked by usage_by_memory.csv (default: most effective)")
        ->check(CLI::Range(1, kSkillCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) return cmd_generate(clues, seed, gen_out);
        if (*run) return cmd_run(config_path, overrides, seeds, run_out, jobs);
        if (*rep) return cmd_report(runs_dir, report_out, attribution, skill);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
