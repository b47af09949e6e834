#include "wmsudoku/skills.hpp"

#include <algorithm>

#include "wmsudoku/error.hpp"

namespace wmsudoku {

std::string Skill::name() const {
    const char* prefix = kind == ScanKind::Row ? "ROW" : kind == ScanKind::Col ? "COL" : "BOX";
    return prefix + std::to_string(span);
}

const Skill& skill_by_code(int code) {
    if (code < 1 || code > kSkillCount) {
        throw Error(ErrorCode::BadSkillCode, "skill code must be 1..10, got " + std::to_string(code));
    }
    return kSkillCatalog[code - 1];
}

std::optional<Skill> skill_by_name(std::string_view name) {
    for (const Skill& s : kSkillCatalog) {
        if (s.name() == name) return s;
    }
    return std::nullopt;
}

std::vector<Coord> scan_window(const Skill& s, Coord target) {
    std::vector<Coord> out;
    out.reserve(s.span);
    switch (s.kind) {
    case ScanKind::Row: {
        const int start = std::clamp(target.col - s.span / 2, 0, kSide - s.span);
        for (int c = start; c < start + s.span; ++c) out.push_back({target.row, c});
        break;
    }
    case ScanKind::Col: {
        const int start = std::clamp(target.row - s.span / 2, 0, kSide - s.span);
        for (int r = start; r < start + s.span; ++r) out.push_back({r, target.col});
        break;
    }
    case ScanKind::Box: {
        const int r0 = 3 * (target.row / 3);
        const int c0 = 3 * (target.col / 3);
        for (int i = 0; i < s.span; ++i) out.push_back({r0 + i / 3, c0 + i % 3});
        break;
    }
    }
    return out;
}

}  // namespace wmsudoku
