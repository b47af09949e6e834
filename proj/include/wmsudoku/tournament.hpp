#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wmsudoku/agent.hpp"
#include "wmsudoku/config.hpp"

namespace wmsudoku {

struct Agent {
    AgentProfile profile;
    SkillSelector selector;
};

struct Society {
    std::vector<Agent> agents;
    int total_memory = 0;
    int mc_min = 0;
    int mc_max = 0;

    int size() const { return static_cast<int>(agents.size()); }
};

/// Profiles Mc = mc_min, mc_min + step, ..., mc_max with Ms = M - Mc and
/// weights uniform on [0,1) from the (seed, agent id) stream. Throws BadRange.
Society build_society(const TournamentConfig& cfg, std::uint64_t seed);

/// s_i = 1 - f_i / max f, or all ones when every f_i is zero. Throws EmptySociety.
std::vector<double> score_society(const std::vector<int>& dof);

/// D_ij = 1 - |Mc_i - Mc_j| / (Mc_max - Mc_min); 1 for every pair when the range is empty.
double memory_similarity(int i, int j, const Society& society);

inline double fitness(double partner_score, double similarity) { return partner_score * similarity; }

struct PartnerChoice {
    std::optional<int> partner;  // empty when nobody beats the agent's own fitness
    double fitness = 0.0;        // F_ij* (F_ii when there is no partner)
};

/// argmax_j F_ij over the whole society, self included; ties go to the larger
/// similarity, then the lower id.
PartnerChoice select_partner(int i, const std::vector<double>& scores, const Society& society);

struct LearningEvent {
    int learner = 0;
    int partner = 0;
    double fitness = 0.0;

    friend bool operator==(const LearningEvent&, const LearningEvent&) = default;
};

/// Convex update v_i <- (1 - F) v_i + F v_j, component-wise.
SkillSelector blend(const SkillSelector& own, const SkillSelector& partner, double f);

/// Synchronous social learning: every partner is chosen against the
/// pre-update selectors. Returns the events applied.
std::vector<LearningEvent> learn_step(Society& society, const std::vector<double>& scores);

struct AgentGame {
    int agent = 0;
    int sa_mem = 0;
    int skill_mem = 0;
    SkillSelector selector;  // the selector the game was played with
    GameOutcome outcome;
    double score = 0.0;

    int dof() const { return outcome.dof.total; }
};

struct ReplayRecord {
    std::vector<AgentGame> games;
    std::vector<LearningEvent> learning;
    double best_score = 0.0;
};

enum class Termination { Completed, Stagnated, ReplayCap };
std::string_view to_string(Termination t);
std::optional<Termination> termination_from_string(std::string_view s);

struct RoundLog {
    int round = 0;
    int clue_count = 0;
    Grid puzzle;
    std::vector<ReplayRecord> replays;
    Termination terminated_by = Termination::ReplayCap;
};

struct TournamentLog {
    std::uint64_t seed = 0;
    TournamentConfig config;
    std::vector<RoundLog> rounds;
};

/// Optional instrumentation for invariant checks.
struct TournamentObserver {
    // Called with a label after society construction, before every replay and after every learning step.
    std::function<void(const Society&, std::string_view)> on_checkpoint;
    // Every trace event of every game, tagged with the agent id.
    std::function<void(int, const TraceEvent&)> on_trace;
};

/// Plays one round: replay the puzzle until an agent completes it, the best
/// score stalls for stagnation_window replays, or max_replays is reached.
RoundLog run_round(Society& society, const Grid& puzzle, const TournamentConfig& cfg, int round = 1,
                   const TournamentObserver* observer = nullptr);

/// Puzzle for round r (1-based): the configured fixture or a generated grid.
Grid round_puzzle(const TournamentConfig& cfg, std::uint64_t seed, int round);

TournamentLog run_tournament(const TournamentConfig& cfg, std::uint64_t seed,
                             const TournamentObserver* observer = nullptr);

}  // namespace wmsudoku
