#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wmsudoku/grid.hpp"
#include "wmsudoku/sa_memory.hpp"
#include "wmsudoku/skills.hpp"
#include "wmsudoku/solver.hpp"

namespace wmsudoku {

/// Fixed working-memory split of one agent: skill_mem + sa_mem == total.
struct AgentProfile {
    int id = 0;
    int skill_mem = 0;  // Ms
    int sa_mem = 0;     // Mc
    int total = 0;      // M

    bool conserved() const { return skill_mem + sa_mem == total; }

    friend bool operator==(const AgentProfile&, const AgentProfile&) = default;
};

/// One weight in [0,1] per skill, indexed by skill code - 1.
struct SkillSelector {
    std::array<double, kSkillCount> weights{};

    double weight(int code) const { return weights.at(code - 1); }
    bool in_unit_range() const;

    friend bool operator==(const SkillSelector&, const SkillSelector&) = default;
};

/// Greedy fill of the skill memory: skills in (weight desc, code asc) order,
/// each taken if it still fits, skipping those that do not.
std::vector<Skill> load_skills(const SkillSelector& selector, int skill_mem);

struct GameOutcome {
    Grid final_grid;
    DofReport dof;  // measured through the agent's own scanning
    std::vector<int> loaded_skills;
    std::vector<Fill> fills;
    int passes_used = 0;
};

/// Diagnostic event emitted during play. pass == 0 marks the evaluation pass.
struct TraceEvent {
    enum class Kind { Push, Candidates, Fill, Evaluate };

    Kind kind = Kind::Push;
    int pass = 0;
    Coord cell;
    int skill = 0;
    Observation observation;
    bool refreshed = false;
    std::optional<Observation> evicted;
    int queue_size = 0;
    int capacity = 0;
    DigitSet candidates;
    int digit = 0;
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct PlayOptions {
    // Scanned empty cells also take a memory slot (recorded with digit 0).
    bool observe_empty = false;
    TraceSink trace;
};

/// One line per event, e.g. "pass=1 cell=0,3 push skill=8 at=4,3 digit=7 len=12/45".
std::string format_event(const TraceEvent& e);
TraceSink line_trace(std::ostream& out);

/// Bounded-memory play. SA memory starts empty; up to max_steps passes over
/// the empty cells, each cell scanned with every loaded skill before its
/// visible candidates are checked for a singleton. A closing no-fill pass
/// measures the remaining degrees of freedom.
GameOutcome play_game(const AgentProfile& profile, const SkillSelector& selector, const Grid& puzzle,
                      int max_steps, const PlayOptions& options = {});

/// Same as play_game with an explicit skill list instead of a selector.
GameOutcome play_with_skills(const AgentProfile& profile, const std::vector<Skill>& loaded,
                             const Grid& puzzle, int max_steps, const PlayOptions& options = {});

}  // namespace wmsudoku
