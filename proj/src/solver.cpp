#include "wmsudoku/solver.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "wmsudoku/error.hpp"
#include "wmsudoku/rng.hpp"

namespace wmsudoku {

SolveResult solve_naked_singles(const Grid& g, int max_steps) {
    if (max_steps < 1) throw Error(ErrorCode::BadArgs, "max_steps must be >= 1");
    SolveResult r{g, {}, {}, 0};
    for (int pass = 1; pass <= max_steps; ++pass) {
        const auto empties = r.grid.empty_cells();
        if (empties.empty()) break;
        r.passes_used = pass;
        int fills = 0;
        for (Coord c : empties) {
            const DigitSet cand = candidates_unbounded(r.grid, c);
            if (cand.empty()) throw Error(ErrorCode::ContradictionFound, "empty candidate set");
            if (cand.size() == 1) {
                r.grid.set(c, cand.first());
                r.fills.push_back({pass, c, cand.first()});
                ++fills;
            }
        }
        if (fills == 0) break;
    }
    r.dof = unbounded_dof(r.grid);
    for (const auto& [c, f] : r.dof.per_cell) {
        if (f == 0) throw Error(ErrorCode::ContradictionFound, "empty candidate set");
    }
    return r;
}

namespace {

// Most-constrained-cell backtracking; returns true to stop early.
bool count_rec(Grid& g, std::int64_t cap, std::int64_t& found) {
    int best = -1;
    DigitSet best_set;
    int best_size = 10;
    for (int k = 0; k < kCells; ++k) {
        const Coord c = Coord::from_index(k);
        if (!g.empty_at(c)) continue;
        const DigitSet s = candidates_unbounded(g, c);
        if (s.size() < best_size) {
            best = k;
            best_set = s;
            best_size = s.size();
            if (best_size <= 1) break;
        }
    }
    if (best < 0) return ++found >= cap;
    const Coord c = Coord::from_index(best);
    for (int d : best_set.digits()) {
        g.set(c, d);
        if (count_rec(g, cap, found)) {
            g.clear(c);
            return true;
        }
    }
    g.clear(c);
    return false;
}

bool fill_rec(Grid& g, int k, Rng& rng) {
    if (k == kCells) return true;
    const Coord c = Coord::from_index(k);
    std::array<int, 9> order{};
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(std::span<int>(order));
    const DigitSet allowed = candidates_unbounded(g, c);
    for (int d : order) {
        if (!allowed.contains(d)) continue;
        g.set(c, d);
        if (fill_rec(g, k + 1, rng)) return true;
    }
    g.clear(c);
    return false;
}

}  // namespace

std::int64_t count_solutions(const Grid& g, std::int64_t cap) {
    if (cap < 1) throw Error(ErrorCode::BadArgs, "cap must be >= 1");
    if (!g.consistent()) return 0;
    Grid work = g;
    std::int64_t found = 0;
    count_rec(work, cap, found);
    return found;
}

Grid generate_solution(std::uint64_t seed) {
    Rng rng(seed, StreamTag::PuzzleFill, 0);
    Grid g;
    fill_rec(g, 0, rng);
    return g;
}

Grid generate_puzzle(int clue_count, std::uint64_t seed) {
    if (clue_count < 17 || clue_count > kCells) {
        throw Error(ErrorCode::BadArgs, "clue count must be in [17, 81], got " + std::to_string(clue_count));
    }
    Grid g = generate_solution(seed);
    std::array<int, kCells> order{};
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed, StreamTag::PuzzleRemoval, 0);
    rng.shuffle(std::span<int>(order));
    for (int i = 0; i < kCells - clue_count; ++i) g.clear(Coord::from_index(order[i]));
    return g;
}

}  // namespace wmsudoku
