#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "wmsudoku/skills.hpp"
#include "wmsudoku/tournament.hpp"

namespace wmsudoku {

/// Loading events per skill (one per agent per replay), overall and per round.
struct SkillUsageTable {
    std::array<long, kSkillCount> count{};
    std::vector<std::array<long, kSkillCount>> per_round;

    friend bool operator==(const SkillUsageTable&, const SkillUsageTable&) = default;
};

struct EffectivenessTable {
    std::array<double, kSkillCount> mass{};

    friend bool operator==(const EffectivenessTable&, const EffectivenessTable&) = default;
};

struct UsageByMemoryTable {
    int skill_code = 0;
    std::map<int, long> count;  // Mc -> games in which the skill was loaded

    friend bool operator==(const UsageByMemoryTable&, const UsageByMemoryTable&) = default;
};

/// Final-replay score per (agent, round): mean and population std over seeds.
struct ScoreMatrix {
    std::vector<int> mc;
    int rounds = 0;
    std::vector<std::vector<double>> mean;  // [agent][round]
    std::vector<std::vector<double>> std;
    int samples = 0;

    friend bool operator==(const ScoreMatrix&, const ScoreMatrix&) = default;
};

enum class Attribution {
    TopScorers,  // only agents holding the game's maximum score contribute
    AllAgents,   // every agent contributes its score
};

SkillUsageTable skill_popularity(const std::vector<TournamentLog>& logs);
EffectivenessTable skill_effectiveness(const std::vector<TournamentLog>& logs,
                                       Attribution mode = Attribution::TopScorers);
UsageByMemoryTable skill_usage_by_memory(const std::vector<TournamentLog>& logs, int skill_code);
ScoreMatrix score_matrix(const std::vector<TournamentLog>& logs);

/// Highest-mass skill, ties to the lower code.
int top_skill(const EffectivenessTable& t);
/// Skill codes ordered by value desc, code asc.
std::vector<int> ranking(const std::array<double, kSkillCount>& values);
std::vector<int> ranking(const std::array<long, kSkillCount>& values);

/// Throws ShapeMismatch naming the first key on which a log departs from the first one.
void check_same_shape(const std::vector<TournamentLog>& logs);

struct ReportTables {
    SkillUsageTable popularity;
    EffectivenessTable effectiveness;
    UsageByMemoryTable usage_by_memory;
    ScoreMatrix scores;
};

/// popularity.csv, effectiveness.csv, usage_by_memory.csv and score_matrix.csv.
std::vector<std::filesystem::path> write_tables(const ReportTables& tables, const std::filesystem::path& out_dir);

std::string popularity_csv(const SkillUsageTable& t);
std::string effectiveness_csv(const EffectivenessTable& t);
std::string usage_by_memory_csv(const UsageByMemoryTable& t);
std::string score_matrix_csv(const ScoreMatrix& t);

SkillUsageTable parse_popularity_csv(const std::string& text);
EffectivenessTable parse_effectiveness_csv(const std::string& text);
UsageByMemoryTable parse_usage_by_memory_csv(const std::string& text, int skill_code);
ScoreMatrix parse_score_matrix_csv(const std::string& text);

}  // namespace wmsudoku
