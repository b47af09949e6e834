#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wmsudoku/grid.hpp"

namespace wmsudoku {

inline constexpr int kSkillCount = 10;

enum class ScanKind { Row, Col, Box };

/// A scanning pattern and the memory it occupies (one unit per scanned cell).
struct Skill {
    int code = 0;  // 1..10
    ScanKind kind = ScanKind::Row;
    int span = 0;

    constexpr int cost() const { return span; }
    std::string name() const;

    friend constexpr bool operator==(const Skill&, const Skill&) = default;
};

inline constexpr std::array<Skill, kSkillCount> kSkillCatalog{{
    {1, ScanKind::Row, 3},
    {2, ScanKind::Row, 5},
    {3, ScanKind::Row, 7},
    {4, ScanKind::Row, 9},
    {5, ScanKind::Col, 3},
    {6, ScanKind::Col, 5},
    {7, ScanKind::Col, 7},
    {8, ScanKind::Col, 9},
    {9, ScanKind::Box, 5},
    {10, ScanKind::Box, 9},
}};

/// Throws BadSkillCode outside 1..10.
const Skill& skill_by_code(int code);
std::optional<Skill> skill_by_name(std::string_view name);

/// Cells read by a skill applied at target. Row/column windows are centred on
/// the target and clamped to the line; box windows take the first span cells
/// of the target's box in reading order.
std::vector<Coord> scan_window(const Skill& s, Coord target);

}  // namespace wmsudoku
