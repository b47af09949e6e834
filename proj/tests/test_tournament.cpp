#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "wmsudoku/error.hpp"
#include "wmsudoku/rng.hpp"
#include "wmsudoku/tournament.hpp"
#include "wmsudoku/tournament_log.hpp"

using namespace wmsudoku;

namespace {

constexpr double kTol = 1e-12;

Society society_with_mc(std::vector<int> mcs, int total = 54) {
    Society s;
    s.total_memory = total;
    s.mc_min = *std::min_element(mcs.begin(), mcs.end());
    s.mc_max = *std::max_element(mcs.begin(), mcs.end());
    for (int i = 0; i < static_cast<int>(mcs.size()); ++i) {
        Agent a;
        a.profile = {i, total - mcs[i], mcs[i], total};
        a.selector.weights.fill(0.5);
        s.agents.push_back(a);
    }
    return s;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("build_society") {
    const Society s = build_society(TournamentConfig{}, 1);
    REQUIRE(s.size() == 19);
    CHECK(s.agents[0].profile.sa_mem == 9);
    CHECK(s.agents[0].profile.skill_mem == 45);
    CHECK(s.agents[18].profile.sa_mem == 45);
    CHECK(s.agents[18].profile.skill_mem == 9);
    CHECK(s.mc_min == 9);
    CHECK(s.mc_max == 45);
    for (int i = 0; i < s.size(); ++i) {
        const auto& p = s.agents[i].profile;
        CHECK(p.id == i);
        CHECK(p.sa_mem == 9 + 2 * i);
        CHECK(p.skill_mem + p.sa_mem == 54);
        CHECK(s.agents[i].selector.in_unit_range());
    }
    const Society t = build_society(TournamentConfig{}, 1);
    const Society u = build_society(TournamentConfig{}, 2);
    for (int i = 0; i < s.size(); ++i) {
        CHECK(s.agents[i].selector == t.agents[i].selector);
        CHECK(s.agents[i].selector != u.agents[i].selector);
    }
    TournamentConfig bad;
    bad.mc_max = 60;
    CHECK(code_of([&] { build_society(bad, 1); }) == ErrorCode::BadRange);
    bad = {};
    bad.mc_step = 5;
    CHECK(code_of([&] { build_society(bad, 1); }) == ErrorCode::BadRange);
}

TEST_CASE("score_society") {
    const auto s = score_society({0, 10, 20});
    REQUIRE(s.size() == 3);
    CHECK(std::abs(s[0] - 1.0) < kTol);
    CHECK(std::abs(s[1] - 0.5) < kTol);
    CHECK(std::abs(s[2] - 0.0) < kTol);
    CHECK(score_society({0, 0, 0}) == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(score_society({7}) == std::vector<double>{0.0});
    CHECK(code_of([] { score_society({}); }) == ErrorCode::EmptySociety);

    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> f(1 + rng.below(25));
        for (int& v : f) v = static_cast<int>(rng.below(40));
        const auto sc = score_society(f);
        const int fmax = *std::max_element(f.begin(), f.end());
        bool some_zero = false;
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(sc[i] >= 0.0);
            CHECK(sc[i] <= 1.0);
            some_zero |= sc[i] == 0.0;
            if (fmax > 0) CHECK((sc[i] == 1.0) == (f[i] == 0));
        }
        if (fmax > 0) CHECK(some_zero);
    }
}

TEST_CASE("memory_similarity") {
    const Society s = build_society(TournamentConfig{}, 1);
    CHECK(memory_similarity(4, 4, s) == 1.0);
    CHECK(std::abs(memory_similarity(0, 18, s)) < kTol);
    CHECK(std::abs(memory_similarity(0, 9, s) - 0.5) < kTol);  // Mc 9 vs 27 over a range of 36
    for (int i = 0; i < s.size(); ++i) {
        for (int j = 0; j < s.size(); ++j) {
            const double d = memory_similarity(i, j, s);
            CHECK(d == memory_similarity(j, i, s));
            CHECK(d >= 0.0);
            CHECK(d <= 1.0);
        }
    }
    const Society flat = society_with_mc({20, 20, 20});
    CHECK(memory_similarity(0, 2, flat) == 1.0);
}

TEST_CASE("fitness") {
    CHECK(fitness(0.0, 0.7) == 0.0);
    CHECK(fitness(0.3, 1.0) == 0.3);
    CHECK(std::abs(fitness(0.8, 0.5) - 0.4) < kTol);
}

TEST_CASE("select_partner") {
    SUBCASE("the unique best scorer keeps its own selector") {
        const Society s = society_with_mc({9, 19, 29});
        const auto c = select_partner(1, {0.2, 0.9, 0.5}, s);
        CHECK(!c.partner);
        CHECK(c.fitness == 0.9);
    }
    SUBCASE("fitness tie goes to the more similar agent") {
        const Society s = society_with_mc({0, 10, 20, 30, 40});
        // F_01 = 0.5 * 0.75, F_02 = 0.75 * 0.5
        const auto c = select_partner(0, {0.0, 0.5, 0.75, 0.0, 0.0}, s);
        REQUIRE(c.partner);
        CHECK(*c.partner == 1);
        CHECK(std::abs(c.fitness - 0.375) < kTol);
    }
    SUBCASE("full tie goes to the lower id") {
        const Society s = society_with_mc({0, 10, 20, 30, 40});
        const auto c = select_partner(2, {0.0, 0.6, 0.0, 0.6, 0.0}, s);
        REQUIRE(c.partner);
        CHECK(*c.partner == 1);
    }
    SUBCASE("a zero-score agent learns from any positive fitness") {
        const Society s = society_with_mc({9, 45});
        const auto c = select_partner(0, {0.0, 0.0}, s);
        CHECK(!c.partner);
        const Society t = society_with_mc({9, 27, 45});
        const auto d = select_partner(0, {0.0, 0.2, 0.0}, t);
        REQUIRE(d.partner);
        CHECK(*d.partner == 1);
        CHECK(std::abs(d.fitness - 0.1) < kTol);
    }
    SUBCASE("properties: F in [0,1], F_ii = s_i, partner only when strictly better") {
        const Society s = build_society(TournamentConfig{}, 8);
        Rng rng(9);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> sc(s.size());
            for (double& v : sc) v = rng.uniform();
            for (int i = 0; i < s.size(); ++i) {
                CHECK(fitness(sc[i], memory_similarity(i, i, s)) == sc[i]);
                for (int j = 0; j < s.size(); ++j) {
                    const double f = fitness(sc[j], memory_similarity(i, j, s));
                    CHECK(f >= 0.0);
                    CHECK(f <= 1.0);
                }
                const auto c = select_partner(i, sc, s);
                if (c.partner) CHECK(c.fitness > sc[i]);
            }
        }
    }
}

TEST_CASE("learn_step") {
    SUBCASE("convex update") {
        SkillSelector a, b;
        a.weights.fill(0.2);
        b.weights.fill(0.6);
        CHECK(blend(a, b, 0.0) == a);
        CHECK(blend(a, b, 1.0) == b);
        for (double w : blend(a, b, 0.5).weights) CHECK(std::abs(w - 0.4) < kTol);
    }
    SUBCASE("synchronous: partners read pre-update selectors") {
        Society s = society_with_mc({9, 27, 45});
        s.agents[0].selector.weights.fill(0.0);
        s.agents[1].selector.weights.fill(1.0);
        s.agents[2].selector.weights.fill(0.5);
        // agent 1 best; 0 and 2 both learn from it with F = 0.8 * 0.5
        const auto events = learn_step(s, {0.0, 0.8, 0.1});
        REQUIRE(events.size() == 2);
        CHECK(events[0] == LearningEvent{0, 1, 0.4});
        CHECK(events[1].learner == 2);
        CHECK(events[1].partner == 1);
        for (double w : s.agents[0].selector.weights) CHECK(std::abs(w - 0.4) < kTol);
        for (double w : s.agents[1].selector.weights) CHECK(w == 1.0);
        for (double w : s.agents[2].selector.weights) CHECK(std::abs(w - 0.7) < kTol);
    }
    SUBCASE("weights stay in [0,1] without clamping; profiles never change") {
        Society s = build_society(TournamentConfig{}, 4);
        const Society before = s;
        Rng rng(12);
        for (int step = 0; step < 500; ++step) {
            std::vector<double> sc(s.size());
            for (double& v : sc) v = rng.uniform();
            const int best = static_cast<int>(std::max_element(sc.begin(), sc.end()) - sc.begin());
            const SkillSelector best_sel = s.agents[best].selector;
            learn_step(s, sc);
            CHECK(s.agents[best].selector == best_sel);
            for (int i = 0; i < s.size(); ++i) {
                CHECK(s.agents[i].selector.in_unit_range());
                CHECK(s.agents[i].profile == before.agents[i].profile);
            }
        }
    }
}

TEST_CASE("run_round") {
    const TournamentConfig cfg;
    SUBCASE("complete puzzle ends after one replay") {
        Society s = build_society(cfg, 1);
        const RoundLog r = run_round(s, generate_puzzle(81, 5), cfg);
        REQUIRE(r.replays.size() == 1);
        CHECK(r.terminated_by == Termination::Completed);
        for (const auto& g : r.replays[0].games) {
            CHECK(g.dof() == 0);
            CHECK(g.score == 1.0);
        }
    }
    SUBCASE("stagnation when learning cannot change anything") {
        Society s = society_with_mc({9, 27, 45});
        const Grid hard = generate_puzzle(24, 3);
        TournamentConfig c = cfg;
        c.stagnation_window = 4;
        const RoundLog r = run_round(s, hard, c);
        CHECK(r.terminated_by == Termination::Stagnated);
        CHECK(r.replays.size() == 1 + 4);
        for (const auto& rep : r.replays) {
            for (const auto& g : rep.games) CHECK(g.dof() > 0);
        }
    }
    SUBCASE("replay cap") {
        Society s = society_with_mc({9, 27, 45});
        TournamentConfig c = cfg;
        c.max_replays = 3;
        c.stagnation_window = 10;
        const RoundLog r = run_round(s, generate_puzzle(24, 3), c);
        CHECK(r.terminated_by == Termination::ReplayCap);
        CHECK(r.replays.size() == 3);
    }
    SUBCASE("round invariants on generated puzzles") {
        Society s = build_society(cfg, 6);
        for (int clues : {74, 56, 41}) {
            const RoundLog r = run_round(s, generate_puzzle(clues, 40 + clues), cfg);
            CHECK(!r.replays.empty());
            CHECK(static_cast<int>(r.replays.size()) <= cfg.max_replays);
            for (const auto& rep : r.replays) {
                double best = 0.0;
                for (const auto& g : rep.games) {
                    CHECK(g.score >= 0.0);
                    CHECK(g.score <= 1.0);
                    best = std::max(best, g.score);
                }
                CHECK(rep.best_score == best);
            }
            if (r.terminated_by == Termination::Completed) {
                const auto& last = r.replays.back().games;
                CHECK(std::any_of(last.begin(), last.end(), [](const AgentGame& g) { return g.dof() == 0; }));
            }
        }
    }
}

TEST_CASE("run_tournament") {
    const TournamentConfig cfg;
    const TournamentLog a = run_tournament(cfg, 3);
    REQUIRE(a.rounds.size() == 9);
    const std::vector<int> schedule{76, 74, 71, 67, 62, 56, 49, 41, 32};
    for (int r = 0; r < 9; ++r) {
        CHECK(a.rounds[r].round == r + 1);
        CHECK(a.rounds[r].clue_count == schedule[r]);
        CHECK(a.rounds[r].puzzle.filled_count() == schedule[r]);
    }
    const TournamentLog b = run_tournament(cfg, 3);
    CHECK(serialize_log(a) == serialize_log(b));
    CHECK(serialize_log(a) != serialize_log(run_tournament(cfg, 4)));

    SUBCASE("selectors carry over between rounds") {
        const auto& end_r1 = a.rounds[0].replays.back();
        const auto& start_r2 = a.rounds[1].replays.front();
        for (const auto& e : end_r1.learning) {
            CHECK(start_r2.games[e.learner].selector ==
                  blend(end_r1.games[e.learner].selector, end_r1.games[e.partner].selector, e.fitness));
        }
    }
    SUBCASE("fixture puzzles replace generated ones") {
        TournamentConfig c = cfg;
        c.rounds = {79};
        c.fixtures[1] = WMSUDOKU_FIXTURES "/column_forced.txt";
        const TournamentLog f = run_tournament(c, 1);
        CHECK(f.rounds[0].puzzle == read_grid_file(WMSUDOKU_FIXTURES "/column_forced.txt"));
    }
}

TEST_CASE("tournament log round trip") {
    TournamentConfig cfg;
    cfg.rounds = {71, 41};
    const TournamentLog log = run_tournament(cfg, 11);
    const std::string text = serialize_log(log);
    std::istringstream in(text);
    const TournamentLog back = read_log(in);
    CHECK(back.seed == log.seed);
    CHECK(back.config == log.config);
    REQUIRE(back.rounds.size() == log.rounds.size());
    for (std::size_t r = 0; r < log.rounds.size(); ++r) {
        const auto& x = log.rounds[r];
        const auto& y = back.rounds[r];
        CHECK(x.puzzle == y.puzzle);
        CHECK(x.terminated_by == y.terminated_by);
        REQUIRE(x.replays.size() == y.replays.size());
        for (std::size_t k = 0; k < x.replays.size(); ++k) {
            CHECK(x.replays[k].learning == y.replays[k].learning);
            CHECK(x.replays[k].best_score == y.replays[k].best_score);
            for (std::size_t i = 0; i < x.replays[k].games.size(); ++i) {
                const auto& g = x.replays[k].games[i];
                const auto& h = y.replays[k].games[i];
                CHECK(g.selector == h.selector);
                CHECK(g.score == h.score);
                CHECK(g.outcome.dof == h.outcome.dof);
                CHECK(g.outcome.fills == h.outcome.fills);
                CHECK(g.outcome.final_grid == h.outcome.final_grid);
                CHECK(g.outcome.loaded_skills == h.outcome.loaded_skills);
            }
        }
    }
    CHECK(serialize_log(back) == text);

    std::istringstream garbage("{\"record\":\"game\"}\n");
    CHECK(code_of([&] { read_log(garbage); }) == ErrorCode::ParseError);
}
