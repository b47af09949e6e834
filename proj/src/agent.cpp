#include "wmsudoku/agent.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "wmsudoku/error.hpp"

namespace wmsudoku {

bool SkillSelector::in_unit_range() const {
    return std::all_of(weights.begin(), weights.end(), [](double w) { return w >= 0.0 && w <= 1.0; });
}

std::vector<Skill> load_skills(const SkillSelector& selector, int skill_mem) {
    std::array<int, kSkillCount> order{};
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return selector.weight(a) > selector.weight(b); });
    std::vector<Skill> loaded;
    int remaining = skill_mem;
    for (int code : order) {
        const Skill& s = skill_by_code(code);
        if (s.cost() <= remaining) {
            loaded.push_back(s);
            remaining -= s.cost();
        }
    }
    return loaded;
}

namespace {

std::string coord_str(Coord c) { return std::to_string(c.row) + "," + std::to_string(c.col); }

std::string digits_str(DigitSet s) {
    std::string out;
    for (int d : s.digits()) out.push_back(static_cast<char>('0' + d));
    return out.empty() ? "-" : out;
}

class Game {
public:
    Game(const AgentProfile& profile, const std::vector<Skill>& loaded, const Grid& puzzle,
         const PlayOptions& options)
        : loaded_(loaded),
          grid_(puzzle),
          memory_(profile.sa_mem),
          observe_empty_(options.observe_empty),
          trace_(options.trace) {}

    // Scans around the target with every loaded skill, then reads the candidates.
    DigitSet observe(Coord target, int pass) {
        for (const Skill& s : loaded_) {
            for (Coord w : scan_window(s, target)) {
                const int d = grid_.at(w);
                if (d == 0 && !observe_empty_) continue;
                const Observation obs{w, d};
                const PushResult r = memory_.push(obs);
                if (trace_) {
                    TraceEvent e;
                    e.kind = TraceEvent::Kind::Push;
                    e.pass = pass;
                    e.cell = target;
                    e.skill = s.code;
                    e.observation = obs;
                    e.refreshed = r.refreshed;
                    e.evicted = r.evicted;
                    e.queue_size = memory_.size();
                    e.capacity = memory_.capacity();
                    trace_(e);
                }
            }
        }
        const DigitSet cand = memory_.visible_candidates(target);
        if (cand.empty()) throw Error(ErrorCode::ContradictionFound, "no visible candidate at " + coord_str(target));
        emit(pass == 0 ? TraceEvent::Kind::Evaluate : TraceEvent::Kind::Candidates, pass, target, cand, 0);
        return cand;
    }

    GameOutcome run(int max_steps) {
        GameOutcome out;
        for (const Skill& s : loaded_) out.loaded_skills.push_back(s.code);
        for (int pass = 1; pass <= max_steps; ++pass) {
            const auto empties = grid_.empty_cells();
            if (empties.empty()) break;
            out.passes_used = pass;
            int fills = 0;
            for (Coord c : empties) {
                const DigitSet cand = observe(c, pass);
                if (cand.size() == 1) {
                    grid_.set(c, cand.first());
                    out.fills.push_back({pass, c, cand.first()});
                    emit(TraceEvent::Kind::Fill, pass, c, cand, cand.first());
                    ++fills;
                }
            }
            if (fills == 0) break;
        }
        for (Coord c : grid_.empty_cells()) {
            const int f = observe(c, 0).size();
            out.dof.per_cell[c] = f;
            out.dof.total += f;
        }
        out.final_grid = grid_;
        return out;
    }

private:
    void emit(TraceEvent::Kind kind, int pass, Coord cell, DigitSet cand, int digit) {
        if (!trace_) return;
        TraceEvent e;
        e.kind = kind;
        e.pass = pass;
        e.cell = cell;
        e.candidates = cand;
        e.digit = digit;
        e.queue_size = memory_.size();
        e.capacity = memory_.capacity();
        trace_(e);
    }

    const std::vector<Skill>& loaded_;
    Grid grid_;
    SAMemory memory_;
    bool observe_empty_;
    const TraceSink& trace_;
};

}  // namespace

std::string format_event(const TraceEvent& e) {
    std::ostringstream os;
    os << "pass=" << e.pass << " cell=" << coord_str(e.cell) << ' ';
    switch (e.kind) {
    case TraceEvent::Kind::Push:
        os << "push skill=" << e.skill << " at=" << coord_str(e.observation.at)
           << " digit=" << e.observation.digit << " len=" << e.queue_size << '/' << e.capacity;
        if (e.refreshed) os << " refreshed";
        if (e.evicted) os << " evicted=" << coord_str(e.evicted->at) << ':' << e.evicted->digit;
        break;
    case TraceEvent::Kind::Candidates:
        os << "candidates=" << digits_str(e.candidates);
        break;
    case TraceEvent::Kind::Fill:
        os << "fill digit=" << e.digit;
        break;
    case TraceEvent::Kind::Evaluate:
        os << "evaluate candidates=" << digits_str(e.candidates) << " dof=" << e.candidates.size();
        break;
    }
    return os.str();
}

TraceSink line_trace(std::ostream& out) {
    return [&out](const TraceEvent& e) { out << format_event(e) << '\n'; };
}

GameOutcome play_with_skills(const AgentProfile& profile, const std::vector<Skill>& loaded,
                             const Grid& puzzle, int max_steps, const PlayOptions& options) {
    if (max_steps < 1) throw Error(ErrorCode::BadArgs, "max_steps must be >= 1");
    if (!puzzle.consistent()) throw Error(ErrorCode::Inconsistent, "puzzle has duplicate digits among peers");
    Game game(profile, loaded, puzzle, options);
    return game.run(max_steps);
}

GameOutcome play_game(const AgentProfile& profile, const SkillSelector& selector, const Grid& puzzle,
                      int max_steps, const PlayOptions& options) {
    return play_with_skills(profile, load_skills(selector, profile.skill_mem), puzzle, max_steps, options);
}

}  // namespace wmsudoku
