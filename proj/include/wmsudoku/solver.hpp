#pragma once

#include <cstdint>
#include <vector>

#include "wmsudoku/grid.hpp"

namespace wmsudoku {

struct Fill {
    int pass = 0;  // 1-based pass number
    Coord at;
    int digit = 0;

    friend bool operator==(const Fill&, const Fill&) = default;
};

struct SolveResult {
    Grid grid;
    DofReport dof;
    std::vector<Fill> fills;
    int passes_used = 0;
};

/// Full-knowledge naked-single propagation. Each pass visits the empty cells in
/// row-major order and fills singletons immediately; stops at a pass with no
/// fills or after max_steps passes. Throws ContradictionFound on an empty
/// candidate set.
SolveResult solve_naked_singles(const Grid& g, int max_steps);

/// Number of completions of g, stopping once cap is reached.
std::int64_t count_solutions(const Grid& g, std::int64_t cap);

/// Seeded puzzle: randomized backtracking fill followed by removal in a random
/// permutation until clue_count cells remain. Throws BadArgs outside [17, 81].
Grid generate_puzzle(int clue_count, std::uint64_t seed);

/// A complete valid grid drawn from the fill stream of seed.
Grid generate_solution(std::uint64_t seed);

}  // namespace wmsudoku
