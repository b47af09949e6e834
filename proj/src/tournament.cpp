#include "wmsudoku/tournament.hpp"

#include <algorithm>
#include <cmath>

#include "wmsudoku/error.hpp"
#include "wmsudoku/rng.hpp"

namespace wmsudoku {

Society build_society(const TournamentConfig& cfg, std::uint64_t seed) {
    if (cfg.total_memory <= 0 || cfg.mc_step <= 0 || cfg.mc_min < 0 || cfg.mc_max < cfg.mc_min ||
        cfg.mc_max > cfg.total_memory || (cfg.mc_max - cfg.mc_min) % cfg.mc_step != 0) {
        throw Error(ErrorCode::BadRange, "memory range [" + std::to_string(cfg.mc_min) + ", " +
                                             std::to_string(cfg.mc_max) + "] step " + std::to_string(cfg.mc_step) +
                                             " does not fit total " + std::to_string(cfg.total_memory));
    }
    Society s;
    s.total_memory = cfg.total_memory;
    s.mc_min = cfg.mc_min;
    s.mc_max = cfg.mc_max;
    int id = 0;
    for (int mc = cfg.mc_min; mc <= cfg.mc_max; mc += cfg.mc_step, ++id) {
        Agent a;
        a.profile = {id, cfg.total_memory - mc, mc, cfg.total_memory};
        Rng rng(seed, StreamTag::SocietyInit, static_cast<std::uint64_t>(id));
        for (double& w : a.selector.weights) w = rng.uniform();
        s.agents.push_back(a);
    }
    return s;
}

std::vector<double> score_society(const std::vector<int>& dof) {
    if (dof.empty()) throw Error(ErrorCode::EmptySociety, "no agents to score");
    const int fmax = *std::max_element(dof.begin(), dof.end());
    std::vector<double> scores(dof.size(), 1.0);
    if (fmax == 0) return scores;
    for (std::size_t i = 0; i < dof.size(); ++i) {
        scores[i] = 1.0 - static_cast<double>(dof[i]) / static_cast<double>(fmax);
    }
    return scores;
}

double memory_similarity(int i, int j, const Society& society) {
    if (i == j || society.mc_max == society.mc_min) return 1.0;
    const double diff = society.agents.at(i).profile.sa_mem - society.agents.at(j).profile.sa_mem;
    return 1.0 - std::abs(diff / static_cast<double>(society.mc_max - society.mc_min));
}

PartnerChoice select_partner(int i, const std::vector<double>& scores, const Society& society) {
    int best = i;
    double best_f = fitness(scores.at(i), 1.0);
    double best_d = 1.0;
    for (int j = 0; j < society.size(); ++j) {
        const double d = memory_similarity(i, j, society);
        const double f = fitness(scores.at(j), d);
        const bool better = f > best_f || (f == best_f && (d > best_d || (d == best_d && j < best)));
        if (better) {
            best = j;
            best_f = f;
            best_d = d;
        }
    }
    const double own = scores.at(i);
    if (best == i || best_f <= own) return {std::nullopt, own};
    return {best, best_f};
}

SkillSelector blend(const SkillSelector& own, const SkillSelector& partner, double f) {
    SkillSelector out;
    for (int k = 0; k < kSkillCount; ++k) {
        out.weights[k] = (1.0 - f) * own.weights[k] + f * partner.weights[k];
    }
    return out;
}

std::vector<LearningEvent> learn_step(Society& society, const std::vector<double>& scores) {
    std::vector<LearningEvent> events;
    for (int i = 0; i < society.size(); ++i) {
        const PartnerChoice choice = select_partner(i, scores, society);
        if (choice.partner) events.push_back({i, *choice.partner, choice.fitness});
    }
    std::vector<SkillSelector> before;
    before.reserve(society.agents.size());
    for (const Agent& a : society.agents) before.push_back(a.selector);
    for (const LearningEvent& e : events) {
        society.agents[e.learner].selector = blend(before[e.learner], before[e.partner], e.fitness);
    }
    return events;
}

std::string_view to_string(Termination t) {
    switch (t) {
    case Termination::Completed: return "Completed";
    case Termination::Stagnated: return "Stagnated";
    case Termination::ReplayCap: return "ReplayCap";
    }
    return "ReplayCap";
}

std::optional<Termination> termination_from_string(std::string_view s) {
    for (Termination t : {Termination::Completed, Termination::Stagnated, Termination::ReplayCap}) {
        if (to_string(t) == s) return t;
    }
    return std::nullopt;
}

RoundLog run_round(Society& society, const Grid& puzzle, const TournamentConfig& cfg, int round,
                   const TournamentObserver* observer) {
    RoundLog log;
    log.round = round;
    log.clue_count = puzzle.filled_count();
    log.puzzle = puzzle;

    double best_so_far = 0.0;
    int stalled = 0;
    while (true) {
        if (observer && observer->on_checkpoint) observer->on_checkpoint(society, "before-replay");
        ReplayRecord replay;
        std::vector<int> dof;
        for (const Agent& a : society.agents) {
            PlayOptions options;
            options.observe_empty = cfg.observe_empty;
            if (observer && observer->on_trace) {
                options.trace = [observer, id = a.profile.id](const TraceEvent& e) { observer->on_trace(id, e); };
            }
            AgentGame game;
            game.agent = a.profile.id;
            game.sa_mem = a.profile.sa_mem;
            game.skill_mem = a.profile.skill_mem;
            game.selector = a.selector;
            game.outcome = play_game(a.profile, a.selector, puzzle, cfg.max_steps, options);
            dof.push_back(game.dof());
            replay.games.push_back(std::move(game));
        }
        const std::vector<double> scores = score_society(dof);
        for (std::size_t i = 0; i < scores.size(); ++i) replay.games[i].score = scores[i];
        replay.best_score = *std::max_element(scores.begin(), scores.end());

        const bool completed = std::find(dof.begin(), dof.end(), 0) != dof.end();
        const bool first = log.replays.empty();
        if (first || replay.best_score > best_so_far + cfg.epsilon) {
            best_so_far = std::max(best_so_far, replay.best_score);
            stalled = 0;
        } else {
            ++stalled;
        }

        replay.learning = learn_step(society, scores);
        if (observer && observer->on_checkpoint) observer->on_checkpoint(society, "after-learning");
        log.replays.push_back(std::move(replay));

        if (completed) {
            log.terminated_by = Termination::Completed;
            break;
        }
        if (stalled >= cfg.stagnation_window) {
            log.terminated_by = Termination::Stagnated;
            break;
        }
        if (static_cast<int>(log.replays.size()) >= cfg.max_replays) {
            log.terminated_by = Termination::ReplayCap;
            break;
        }
    }
    return log;
}

Grid round_puzzle(const TournamentConfig& cfg, std::uint64_t seed, int round) {
    if (const auto it = cfg.fixtures.find(round); it != cfg.fixtures.end()) {
        return read_grid_file(it->second);
    }
    const int clues = cfg.rounds.at(round - 1);
    return generate_puzzle(clues, derive_key(seed, StreamTag::Puzzle, static_cast<std::uint64_t>(round)));
}

TournamentLog run_tournament(const TournamentConfig& cfg, std::uint64_t seed, const TournamentObserver* observer) {
    validate(cfg);
    TournamentLog log;
    log.seed = seed;
    log.config = cfg;
    Society society = build_society(cfg, seed);
    if (observer && observer->on_checkpoint) observer->on_checkpoint(society, "built");
    for (int r = 1; r <= static_cast<int>(cfg.rounds.size()); ++r) {
        const Grid puzzle = round_puzzle(cfg, seed, r);
        RoundLog round = run_round(society, puzzle, cfg, r, observer);
        log.rounds.push_back(std::move(round));
    }
    return log;
}

}  // namespace wmsudoku
