#include "wmsudoku/tournament_log.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "wmsudoku/error.hpp"

namespace wmsudoku {

using nlohmann::json;

namespace {

// Per-cell degrees of freedom as 81 characters: '-' for filled cells, else the count.
std::string dof_map(const DofReport& dof) {
    std::string out(kCells, '-');
    for (const auto& [c, f] : dof.per_cell) out[c.index()] = static_cast<char>('0' + f);
    return out;
}

DofReport parse_dof_map(const std::string& s) {
    if (s.size() != kCells) throw Error(ErrorCode::ParseError, "dof_map must have 81 characters");
    DofReport r;
    for (int k = 0; k < kCells; ++k) {
        if (s[k] == '-') continue;
        if (s[k] < '0' || s[k] > '9') throw Error(ErrorCode::ParseError, "bad dof_map character");
        const int f = s[k] - '0';
        r.per_cell[Coord::from_index(k)] = f;
        r.total += f;
    }
    return r;
}

json game_record(int round, int replay, const AgentGame& g) {
    json fills = json::array();
    for (const Fill& f : g.outcome.fills) fills.push_back({f.pass, f.at.row, f.at.col, f.digit});
    return json{
        {"record", "game"},
        {"round", round},
        {"replay", replay},
        {"agent", g.agent},
        {"mc", g.sa_mem},
        {"ms", g.skill_mem},
        {"weights", g.selector.weights},
        {"skills", g.outcome.loaded_skills},
        {"passes", g.outcome.passes_used},
        {"fills", fills},
        {"dof", g.outcome.dof.total},
        {"dof_map", dof_map(g.outcome.dof)},
        {"final", serialize_grid(g.outcome.final_grid)},
        {"score", g.score},
    };
}

template <typename T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad field ") + key + ": " + e.what());
    }
}

}  // namespace

std::map<std::string, std::string> log_settings(const TournamentLog& log) { return tournament_settings(log.config); }

void write_log(std::ostream& out, const TournamentLog& log) {
    json header{{"record", "header"}, {"format", kLogFormat}, {"seed", log.seed}, {"config", log_settings(log)}};
    out << header.dump() << '\n';
    for (const RoundLog& r : log.rounds) {
        out << json{{"record", "round"}, {"round", r.round}, {"clues", r.clue_count}, {"puzzle", serialize_grid(r.puzzle)}}
                   .dump()
            << '\n';
        for (std::size_t k = 0; k < r.replays.size(); ++k) {
            const ReplayRecord& rep = r.replays[k];
            const int replay = static_cast<int>(k) + 1;
            int max_dof = 0;
            for (const AgentGame& g : rep.games) {
                out << game_record(r.round, replay, g).dump() << '\n';
                max_dof = std::max(max_dof, g.dof());
            }
            json learning = json::array();
            for (const LearningEvent& e : rep.learning) learning.push_back({e.learner, e.partner, e.fitness});
            out << json{{"record", "replay"},
                        {"round", r.round},
                        {"replay", replay},
                        {"best_score", rep.best_score},
                        {"max_dof", max_dof},
                        {"learning", learning}}
                       .dump()
                << '\n';
        }
        out << json{{"record", "round_end"},
                    {"round", r.round},
                    {"replays", r.replays.size()},
                    {"terminated_by", std::string(to_string(r.terminated_by))}}
                   .dump()
            << '\n';
    }
}

std::string serialize_log(const TournamentLog& log) {
    std::ostringstream os;
    write_log(os, log);
    return os.str();
}

TournamentLog read_log(std::istream& in) {
    TournamentLog log;
    bool have_header = false;
    RoundLog* round = nullptr;
    ReplayRecord pending;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
        }
        const std::string kind = field<std::string>(j, "record");
        if (kind == "header") {
            if (field<std::string>(j, "format") != kLogFormat) throw Error(ErrorCode::ParseError, "unknown log format");
            log.seed = field<std::uint64_t>(j, "seed");
            RunConfig cfg;
            cfg.tournament.fixtures.clear();
            for (const auto& [k, v] : field<std::map<std::string, std::string>>(j, "config")) apply_setting(cfg, k, v);
            log.config = cfg.tournament;
            have_header = true;
            continue;
        }
        if (!have_header) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": record before header");
        if (kind == "round") {
            RoundLog r;
            r.round = field<int>(j, "round");
            r.clue_count = field<int>(j, "clues");
            r.puzzle = parse_grid(field<std::string>(j, "puzzle"));
            log.rounds.push_back(std::move(r));
            round = &log.rounds.back();
            pending = {};
        } else if (kind == "game") {
            if (!round) throw Error(ErrorCode::ParseError, "game record outside a round");
            AgentGame g;
            g.agent = field<int>(j, "agent");
            g.sa_mem = field<int>(j, "mc");
            g.skill_mem = field<int>(j, "ms");
            g.selector.weights = field<std::array<double, kSkillCount>>(j, "weights");
            g.outcome.loaded_skills = field<std::vector<int>>(j, "skills");
            g.outcome.passes_used = field<int>(j, "passes");
            for (const auto& f : field<std::vector<std::array<int, 4>>>(j, "fills")) {
                g.outcome.fills.push_back({f[0], {f[1], f[2]}, f[3]});
            }
            g.outcome.dof = parse_dof_map(field<std::string>(j, "dof_map"));
            if (g.outcome.dof.total != field<int>(j, "dof")) throw Error(ErrorCode::ParseError, "dof disagrees with dof_map");
            g.outcome.final_grid = parse_grid(field<std::string>(j, "final"));
            g.score = field<double>(j, "score");
            pending.games.push_back(std::move(g));
        } else if (kind == "replay") {
            if (!round) throw Error(ErrorCode::ParseError, "replay record outside a round");
            pending.best_score = field<double>(j, "best_score");
            for (const auto& e : j.at("learning")) {
                pending.learning.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
            }
            round->replays.push_back(std::move(pending));
            pending = {};
        } else if (kind == "round_end") {
            if (!round) throw Error(ErrorCode::ParseError, "round_end outside a round");
            const auto t = termination_from_string(field<std::string>(j, "terminated_by"));
            if (!t) throw Error(ErrorCode::ParseError, "unknown termination label");
            round->terminated_by = *t;
            if (field<std::size_t>(j, "replays") != round->replays.size()) {
                throw Error(ErrorCode::ParseError, "replay count mismatch in round " + std::to_string(round->round));
            }
            round = nullptr;
        } else {
            throw Error(ErrorCode::ParseError, "unknown record type " + kind);
        }
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "log has no header");
    return log;
}

TournamentLog load_log(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
    return read_log(in);
}

}  // namespace wmsudoku
