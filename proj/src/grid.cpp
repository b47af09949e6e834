#include "wmsudoku/grid.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "wmsudoku/error.hpp"

namespace wmsudoku {

namespace {

using PeerTable = std::array<std::array<Coord, 20>, kCells>;

PeerTable build_peer_table() {
    PeerTable table{};
    for (int k = 0; k < kCells; ++k) {
        const Coord c = Coord::from_index(k);
        int n = 0;
        for (int j = 0; j < kCells; ++j) {
            const Coord o = Coord::from_index(j);
            if (j != k && (o.row == c.row || o.col == c.col || o.box() == c.box())) {
                table[k][n++] = o;
            }
        }
    }
    return table;
}

const PeerTable& peer_table() {
    static const PeerTable table = build_peer_table();
    return table;
}

}  // namespace

std::vector<int> DigitSet::digits() const {
    std::vector<int> out;
    for (int d = 1; d <= 9; ++d) {
        if (contains(d)) out.push_back(d);
    }
    return out;
}

void Grid::set(Coord c, int digit) {
    if (digit < 0 || digit > 9) {
        throw Error(ErrorCode::BadChar, "digit out of range: " + std::to_string(digit));
    }
    cells_[c.index()] = static_cast<std::uint8_t>(digit);
}

int Grid::filled_count() const {
    int n = 0;
    for (auto v : cells_) n += v != 0;
    return n;
}

std::vector<Coord> Grid::empty_cells() const {
    std::vector<Coord> out;
    for (int k = 0; k < kCells; ++k) {
        if (cells_[k] == 0) out.push_back(Coord::from_index(k));
    }
    return out;
}

bool Grid::consistent() const {
    for (int k = 0; k < kCells; ++k) {
        const int d = cells_[k];
        if (d == 0) continue;
        for (Coord p : peers(Coord::from_index(k))) {
            if (cells_[p.index()] == d) return false;
        }
    }
    return true;
}

Grid parse_grid(std::string_view text, bool allow_inconsistent) {
    std::string payload;
    payload.reserve(kCells);
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        payload.push_back(ch);
    }
    if (payload.size() != kCells) {
        throw Error(ErrorCode::WrongLength,
                    "expected 81 cells, got " + std::to_string(payload.size()));
    }
    Grid g;
    for (int k = 0; k < kCells; ++k) {
        const char ch = payload[k];
        if (ch == '.') continue;
        if (ch < '1' || ch > '9') {
            throw Error(ErrorCode::BadChar,
                        std::string("invalid character '") + ch + "' at position " + std::to_string(k));
        }
        g.set(Coord::from_index(k), ch - '0');
    }
    if (!allow_inconsistent && !g.consistent()) {
        throw Error(ErrorCode::Inconsistent, "duplicate digit among peers");
    }
    return g;
}

std::string serialize_grid(const Grid& g) {
    std::string out(kCells, '.');
    for (int k = 0; k < kCells; ++k) {
        const int d = g.raw()[k];
        if (d != 0) out[k] = static_cast<char>('0' + d);
    }
    return out;
}

Grid read_grid_file(const std::string& path, bool allow_inconsistent) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
    std::string line;
    std::string body;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start != std::string::npos && line[start] == '#') continue;
        body += line;
    }
    return parse_grid(body, allow_inconsistent);
}

std::span<const Coord, 20> peers(Coord c) { return peer_table()[c.index()]; }

bool is_peer(Coord a, Coord b) {
    return a != b && (a.row == b.row || a.col == b.col || a.box() == b.box());
}

DigitSet candidates_unbounded(const Grid& g, Coord c) {
    if (!g.empty_at(c)) {
        throw Error(ErrorCode::CellFilled,
                    "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is filled");
    }
    DigitSet s = DigitSet::all();
    for (Coord p : peers(c)) {
        if (const int d = g.at(p); d != 0) s.erase(d);
    }
    return s;
}

DofReport unbounded_dof(const Grid& g) {
    DofReport r;
    for (Coord c : g.empty_cells()) {
        const int f = candidates_unbounded(g, c).size();
        r.per_cell[c] = f;
        r.total += f;
    }
    return r;
}

}  // namespace wmsudoku
