#include "wmsudoku/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wmsudoku/error.hpp"

namespace wmsudoku {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const std::string t = trim(text);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw Error(ErrorCode::ConfigError, "bad value for " + key + ": '" + text + "'");
    }
    return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        // "a..b" expands to the inclusive range
        if (const auto dots = item.find(".."); dots != std::string::npos) {
            const T lo = parse_number<T>(key, item.substr(0, dots));
            const T hi = parse_number<T>(key, item.substr(dots + 2));
            if (hi < lo) throw Error(ErrorCode::ConfigError, "empty range for " + key + ": " + item);
            for (T v = lo; v <= hi; ++v) out.push_back(v);
            continue;
        }
        out.push_back(parse_number<T>(key, item));
    }
    if (out.empty()) throw Error(ErrorCode::ConfigError, key + " must not be empty");
    return out;
}

template <typename T>
std::string join(const std::vector<T>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(items[i]);
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string format_double12(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, r.ptr);
}

void validate(const TournamentConfig& cfg) {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); };
    if (cfg.total_memory <= 0) fail("total_memory must be > 0");
    if (cfg.mc_step <= 0) fail("mc_step must be > 0");
    if (cfg.mc_min < 0) fail("mc_min must be >= 0");
    if (cfg.mc_max <= cfg.mc_min) fail("mc_max must exceed mc_min");
    if (cfg.mc_max >= cfg.total_memory) fail("total_memory must exceed mc_max");
    if ((cfg.mc_max - cfg.mc_min) % cfg.mc_step != 0) fail("mc_min + mc_step*k must equal mc_max");
    if (cfg.rounds.empty()) fail("rounds must not be empty");
    for (int clues : cfg.rounds) {
        if (clues < 17 || clues > 81) fail("rounds: clue count " + std::to_string(clues) + " outside [17, 81]");
    }
    if (cfg.max_steps < 1) fail("max_steps must be >= 1");
    if (!(cfg.epsilon >= 0.0)) fail("epsilon must be >= 0");
    if (cfg.stagnation_window < 1) fail("stagnation_window must be >= 1");
    if (cfg.max_replays < 1) fail("max_replays must be >= 1");
    for (const auto& [round, path] : cfg.fixtures) {
        if (round < 1 || round > static_cast<int>(cfg.rounds.size())) {
            fail("fixture." + std::to_string(round) + " names a round outside the schedule");
        }
    }
}

void apply_setting(RunConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    TournamentConfig& t = cfg.tournament;
    if (key == "total_memory") t.total_memory = parse_number<int>(key, value);
    else if (key == "mc_min") t.mc_min = parse_number<int>(key, value);
    else if (key == "mc_max") t.mc_max = parse_number<int>(key, value);
    else if (key == "mc_step") t.mc_step = parse_number<int>(key, value);
    else if (key == "rounds") t.rounds = parse_list<int>(key, value);
    else if (key == "max_steps") t.max_steps = parse_number<int>(key, value);
    else if (key == "epsilon") t.epsilon = parse_number<double>(key, value);
    else if (key == "stagnation_window") t.stagnation_window = parse_number<int>(key, value);
    else if (key == "max_replays") t.max_replays = parse_number<int>(key, value);
    else if (key == "observe_empty") {
        if (value == "true" || value == "1") t.observe_empty = true;
        else if (value == "false" || value == "0") t.observe_empty = false;
        else throw Error(ErrorCode::ConfigError, "bad value for observe_empty: '" + value + "'");
    } else if (key == "seeds") cfg.seeds = parse_list<std::uint64_t>(key, value);
    else if (key == "out_dir") cfg.out_dir = value;
    else if (key.rfind("fixture.", 0) == 0) {
        const int round = parse_number<int>(key, key.substr(8));
        if (value.empty()) t.fixtures.erase(round);
        else t.fixtures[round] = value;
    } else {
        throw Error(ErrorCode::ConfigError, "unknown key: " + key);
    }
}

RunConfig parse_config(const std::string& text, RunConfig base) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": expected key=value");
        }
        apply_setting(base, t.substr(0, eq), t.substr(eq + 1));
    }
    validate(base.tournament);
    return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

std::map<std::string, std::string> tournament_settings(const TournamentConfig& cfg) {
    std::map<std::string, std::string> kv{
        {"total_memory", std::to_string(cfg.total_memory)},
        {"mc_min", std::to_string(cfg.mc_min)},
        {"mc_max", std::to_string(cfg.mc_max)},
        {"mc_step", std::to_string(cfg.mc_step)},
        {"rounds", join(cfg.rounds)},
        {"max_steps", std::to_string(cfg.max_steps)},
        {"epsilon", format_double(cfg.epsilon)},
        {"stagnation_window", std::to_string(cfg.stagnation_window)},
        {"max_replays", std::to_string(cfg.max_replays)},
        {"observe_empty", cfg.observe_empty ? "true" : "false"},
    };
    for (const auto& [round, path] : cfg.fixtures) kv["fixture." + std::to_string(round)] = path;
    return kv;
}

std::string snapshot(const RunConfig& cfg) {
    std::string out = "# resolved configuration\n";
    for (const auto& [k, v] : tournament_settings(cfg.tournament)) out += k + "=" + v + "\n";
    out += "seeds=" + join(cfg.seeds) + "\n";
    out += "out_dir=" + cfg.out_dir + "\n";
    return out;
}

}  // namespace wmsudoku
