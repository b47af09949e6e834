#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wmsudoku {

inline constexpr int kSide = 9;
inline constexpr int kCells = 81;

struct Coord {
    int row = 0;
    int col = 0;

    constexpr int box() const { return 3 * (row / 3) + col / 3; }
    constexpr int index() const { return row * kSide + col; }
    static constexpr Coord from_index(int k) { return {k / kSide, k % kSide}; }

    constexpr bool valid() const { return row >= 0 && row < kSide && col >= 0 && col < kSide; }

    friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

/// Set of candidate digits 1..9 packed into bits 1..9.
class DigitSet {
public:
    static constexpr std::uint16_t kAll = 0x3FE;

    constexpr DigitSet() = default;
    static constexpr DigitSet all() { return DigitSet(kAll); }
    static constexpr DigitSet of(std::initializer_list<int> digits) {
        DigitSet s;
        for (int d : digits) s.insert(d);
        return s;
    }

    constexpr void insert(int d) { bits_ |= static_cast<std::uint16_t>(1u << d); }
    constexpr void erase(int d) { bits_ &= static_cast<std::uint16_t>(~(1u << d)); }
    constexpr bool contains(int d) const { return (bits_ >> d) & 1u; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    // Lowest digit in the set; meaningful only when non-empty.
    constexpr int first() const { return std::countr_zero(bits_); }
    constexpr std::uint16_t bits() const { return bits_; }

    std::vector<int> digits() const;

    friend constexpr bool operator==(DigitSet, DigitSet) = default;

private:
    explicit constexpr DigitSet(std::uint16_t bits) : bits_(bits) {}
    std::uint16_t bits_ = 0;
};

/// 9x9 board, row-major, 0 marks an empty cell.
class Grid {
public:
    Grid() { cells_.fill(0); }

    int at(Coord c) const { return cells_[c.index()]; }
    bool empty_at(Coord c) const { return cells_[c.index()] == 0; }
    void set(Coord c, int digit);
    void clear(Coord c) { cells_[c.index()] = 0; }

    int filled_count() const;
    bool complete() const { return filled_count() == kCells; }
    std::vector<Coord> empty_cells() const;

    /// No two equal digits among row, column or box peers.
    bool consistent() const;

    std::span<const std::uint8_t, kCells> raw() const { return cells_; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::array<std::uint8_t, kCells> cells_{};
};

/// Degrees of freedom left on a grid: candidate count per empty cell and their sum.
struct DofReport {
    std::map<Coord, int> per_cell;
    int total = 0;

    friend bool operator==(const DofReport&, const DofReport&) = default;
};

/// Parses 81 payload characters ('1'-'9', '.'). Whitespace is ignored.
/// Inconsistent grids are rejected unless allow_inconsistent is set.
Grid parse_grid(std::string_view text, bool allow_inconsistent = false);

std::string serialize_grid(const Grid& g);

/// Reads a fixture file: '#' lines are comments, the remaining text is one grid.
Grid read_grid_file(const std::string& path, bool allow_inconsistent = false);

/// The 20 cells sharing a row, column or box with c, in row-major order.
std::span<const Coord, 20> peers(Coord c);

// True when a and b are distinct and share a unit.
bool is_peer(Coord a, Coord b);

/// {1..9} minus the digits of every filled peer. Throws CellFilled.
DigitSet candidates_unbounded(const Grid& g, Coord c);

DofReport unbounded_dof(const Grid& g);

}  // namespace wmsudoku
