#include "wmsudoku/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "wmsudoku/config.hpp"
#include "wmsudoku/error.hpp"
#include "wmsudoku/tournament_log.hpp"

namespace wmsudoku {

namespace {

void require_logs(const std::vector<TournamentLog>& logs) {
    if (logs.empty()) throw Error(ErrorCode::EmptyInput, "no tournament logs given");
}

template <typename Fn>
void for_each_game(const std::vector<TournamentLog>& logs, Fn&& fn) {
    for (const TournamentLog& log : logs) {
        for (const RoundLog& r : log.rounds) {
            for (const ReplayRecord& rep : r.replays) fn(r, rep);
        }
    }
}

std::vector<int> society_mc(const TournamentConfig& cfg) {
    std::vector<int> out;
    for (int mc = cfg.mc_min; mc <= cfg.mc_max; mc += cfg.mc_step) out.push_back(mc);
    return out;
}

template <typename T>
std::vector<int> rank_codes(const std::array<T, kSkillCount>& values) {
    std::vector<int> codes(kSkillCount);
    std::iota(codes.begin(), codes.end(), 1);
    std::stable_sort(codes.begin(), codes.end(), [&](int a, int b) { return values[a - 1] > values[b - 1]; });
    return codes;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw Error(ErrorCode::ParseError, "empty CSV");
    return rows;
}

double to_double(const std::string& s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
    }
    return v;
}

long to_long(const std::string& s) {
    const double v = to_double(s);
    return static_cast<long>(std::llround(v));
}

int skill_code_cell(const std::string& s) {
    const long code = to_long(s);
    skill_by_code(static_cast<int>(code));
    return static_cast<int>(code);
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
    out << body;
    if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + path.string());
}

}  // namespace

SkillUsageTable skill_popularity(const std::vector<TournamentLog>& logs) {
    require_logs(logs);
    SkillUsageTable t;
    for_each_game(logs, [&](const RoundLog& r, const ReplayRecord& rep) {
        if (static_cast<int>(t.per_round.size()) < r.round) t.per_round.resize(r.round);
        for (const AgentGame& g : rep.games) {
            for (int code : g.outcome.loaded_skills) {
                ++t.count[code - 1];
                ++t.per_round[r.round - 1][code - 1];
            }
        }
    });
    return t;
}

EffectivenessTable skill_effectiveness(const std::vector<TournamentLog>& logs, Attribution mode) {
    require_logs(logs);
    EffectivenessTable t;
    for_each_game(logs, [&](const RoundLog&, const ReplayRecord& rep) {
        double best = 0.0;
        for (const AgentGame& g : rep.games) best = std::max(best, g.score);
        for (const AgentGame& g : rep.games) {
            if (mode == Attribution::TopScorers && g.score != best) continue;
            for (int code : g.outcome.loaded_skills) t.mass[code - 1] += g.score;
        }
    });
    return t;
}

UsageByMemoryTable skill_usage_by_memory(const std::vector<TournamentLog>& logs, int skill_code) {
    skill_by_code(skill_code);
    require_logs(logs);
    UsageByMemoryTable t;
    t.skill_code = skill_code;
    for (const TournamentLog& log : logs) {
        for (int mc : society_mc(log.config)) t.count.try_emplace(mc, 0);
    }
    for_each_game(logs, [&](const RoundLog&, const ReplayRecord& rep) {
        for (const AgentGame& g : rep.games) {
            const auto& s = g.outcome.loaded_skills;
            if (std::find(s.begin(), s.end(), skill_code) != s.end()) ++t.count[g.sa_mem];
        }
    });
    return t;
}

void check_same_shape(const std::vector<TournamentLog>& logs) {
    require_logs(logs);
    const auto reference = log_settings(logs.front());
    for (std::size_t i = 1; i < logs.size(); ++i) {
        const auto other = log_settings(logs[i]);
        std::set<std::string> keys;
        for (const auto& [k, v] : reference) keys.insert(k);
        for (const auto& [k, v] : other) keys.insert(k);
        for (const std::string& k : keys) {
            const auto a = reference.find(k);
            const auto b = other.find(k);
            if (a == reference.end() || b == other.end() || a->second != b->second) {
                throw Error(ErrorCode::ShapeMismatch, "logs disagree on key '" + k + "' (seed " +
                                                          std::to_string(logs.front().seed) + " vs seed " +
                                                          std::to_string(logs[i].seed) + ")");
            }
        }
        if (logs[i].rounds.size() != logs.front().rounds.size()) {
            throw Error(ErrorCode::ShapeMismatch, "logs disagree on key 'rounds' (round count)");
        }
    }
}

ScoreMatrix score_matrix(const std::vector<TournamentLog>& logs) {
    check_same_shape(logs);
    ScoreMatrix m;
    m.mc = society_mc(logs.front().config);
    m.rounds = static_cast<int>(logs.front().rounds.size());
    m.samples = static_cast<int>(logs.size());
    const std::size_t n = m.mc.size();
    m.mean.assign(n, std::vector<double>(m.rounds, 0.0));
    m.std.assign(n, std::vector<double>(m.rounds, 0.0));
    for (const TournamentLog& log : logs) {
        for (int r = 0; r < m.rounds; ++r) {
            const auto& games = log.rounds[r].replays.back().games;
            if (games.size() != n) throw Error(ErrorCode::ShapeMismatch, "society size differs from configuration");
            for (std::size_t a = 0; a < n; ++a) m.mean[a][r] += games[a].score;
        }
    }
    for (auto& row : m.mean) {
        for (double& v : row) v /= m.samples;
    }
    for (const TournamentLog& log : logs) {
        for (int r = 0; r < m.rounds; ++r) {
            const auto& games = log.rounds[r].replays.back().games;
            for (std::size_t a = 0; a < n; ++a) {
                const double d = games[a].score - m.mean[a][r];
                m.std[a][r] += d * d;
            }
        }
    }
    for (auto& row : m.std) {
        for (double& v : row) v = std::sqrt(v / m.samples);
    }
    return m;
}

int top_skill(const EffectivenessTable& t) { return rank_codes(t.mass).front(); }

std::vector<int> ranking(const std::array<double, kSkillCount>& values) { return rank_codes(values); }
std::vector<int> ranking(const std::array<long, kSkillCount>& values) { return rank_codes(values); }

std::string popularity_csv(const SkillUsageTable& t) {
    std::string out = "skill_code,skill_name,count";
    for (std::size_t r = 0; r < t.per_round.size(); ++r) out += ",round" + std::to_string(r + 1);
    out += '\n';
    for (const Skill& s : kSkillCatalog) {
        out += std::to_string(s.code) + "," + s.name() + "," + std::to_string(t.count[s.code - 1]);
        for (const auto& round : t.per_round) out += "," + std::to_string(round[s.code - 1]);
        out += '\n';
    }
    return out;
}

std::string effectiveness_csv(const EffectivenessTable& t) {
    std::string out = "skill_code,skill_name,mass\n";
    for (const Skill& s : kSkillCatalog) {
        out += std::to_string(s.code) + "," + s.name() + "," + format_double12(t.mass[s.code - 1]) + "\n";
    }
    return out;
}

std::string usage_by_memory_csv(const UsageByMemoryTable& t) {
    std::string out = "mc,count\n";
    for (const auto& [mc, count] : t.count) out += std::to_string(mc) + "," + std::to_string(count) + "\n";
    return out;
}

std::string score_matrix_csv(const ScoreMatrix& t) {
    std::string out = "mc";
    for (int r = 1; r <= t.rounds; ++r) {
        out += ",round" + std::to_string(r) + "_mean,round" + std::to_string(r) + "_std";
    }
    out += '\n';
    for (std::size_t a = 0; a < t.mc.size(); ++a) {
        out += std::to_string(t.mc[a]);
        for (int r = 0; r < t.rounds; ++r) {
            out += "," + format_double12(t.mean[a][r]) + "," + format_double12(t.std[a][r]);
        }
        out += '\n';
    }
    return out;
}

std::vector<std::filesystem::path> write_tables(const ReportTables& tables, const std::filesystem::path& out_dir) {
    if (!std::filesystem::is_directory(out_dir)) {
        throw Error(ErrorCode::IoFailure, "output directory does not exist: " + out_dir.string());
    }
    const std::vector<std::pair<std::string, std::string>> files{
        {"popularity.csv", popularity_csv(tables.popularity)},
        {"effectiveness.csv", effectiveness_csv(tables.effectiveness)},
        {"usage_by_memory.csv", usage_by_memory_csv(tables.usage_by_memory)},
        {"score_matrix.csv", score_matrix_csv(tables.scores)},
    };
    std::vector<std::filesystem::path> written;
    for (const auto& [name, body] : files) {
        write_file(out_dir / name, body);
        written.push_back(out_dir / name);
    }
    return written;
}

SkillUsageTable parse_popularity_csv(const std::string& text) {
    const auto rows = parse_csv(text);
    const std::size_t rounds = rows[0].size() < 3 ? 0 : rows[0].size() - 3;
    SkillUsageTable t;
    t.per_round.assign(rounds, {});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() != rounds + 3) throw Error(ErrorCode::ParseError, "popularity row has wrong width");
        const int code = skill_code_cell(row[0]);
        t.count[code - 1] = to_long(row[2]);
        for (std::size_t r = 0; r < rounds; ++r) t.per_round[r][code - 1] = to_long(row[3 + r]);
    }
    return t;
}

EffectivenessTable parse_effectiveness_csv(const std::string& text) {
    const auto rows = parse_csv(text);
    EffectivenessTable t;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 3) throw Error(ErrorCode::ParseError, "effectiveness row has wrong width");
        t.mass[skill_code_cell(rows[i][0]) - 1] = to_double(rows[i][2]);
    }
    return t;
}

UsageByMemoryTable parse_usage_by_memory_csv(const std::string& text, int skill_code) {
    const auto rows = parse_csv(text);
    UsageByMemoryTable t;
    t.skill_code = skill_code;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 2) throw Error(ErrorCode::ParseError, "usage row has wrong width");
        t.count[static_cast<int>(to_long(rows[i][0]))] = to_long(rows[i][1]);
    }
    return t;
}

ScoreMatrix parse_score_matrix_csv(const std::string& text) {
    const auto rows = parse_csv(text);
    if ((rows[0].size() - 1) % 2 != 0) throw Error(ErrorCode::ParseError, "score matrix header has odd width");
    ScoreMatrix m;
    m.rounds = static_cast<int>((rows[0].size() - 1) / 2);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() != rows[0].size()) throw Error(ErrorCode::ParseError, "score matrix row has wrong width");
        m.mc.push_back(static_cast<int>(to_long(row[0])));
        std::vector<double> mean, sd;
        for (int r = 0; r < m.rounds; ++r) {
            mean.push_back(to_double(row[1 + 2 * r]));
            sd.push_back(to_double(row[2 + 2 * r]));
        }
        m.mean.push_back(std::move(mean));
        m.std.push_back(std::move(sd));
    }
    return m;
}

}  // namespace wmsudoku
