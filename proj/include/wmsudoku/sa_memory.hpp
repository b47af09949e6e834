#pragma once

#include <array>
#include <deque>
#include <optional>

#include "wmsudoku/grid.hpp"

namespace wmsudoku {

struct Observation {
    Coord at;
    int digit = 0;  // 1..9, or 0 for a cell seen empty

    friend bool operator==(const Observation&, const Observation&) = default;
};

struct PushResult {
    bool refreshed = false;              // an entry for the same cell was moved to the back
    std::optional<Observation> evicted;  // oldest entry pushed out
};

/// Situation-awareness memory: a displacement FIFO holding at most one
/// observation per cell. Re-observing a cell moves it to the newest slot.
class SAMemory {
public:
    explicit SAMemory(int capacity) : capacity_(capacity) { present_.fill(false); }

    /// Throws ZeroCapacity when capacity is 0.
    PushResult push(const Observation& obs);

    int capacity() const { return capacity_; }
    int size() const { return static_cast<int>(queue_.size()); }
    // Oldest first.
    const std::deque<Observation>& entries() const { return queue_; }
    bool holds(Coord c) const { return present_[c.index()]; }

    /// {1..9} minus every remembered digit observed at a peer of c.
    DigitSet visible_candidates(Coord c) const;

private:
    int capacity_;
    std::deque<Observation> queue_;
    std::array<bool, kCells> present_{};
};

}  // namespace wmsudoku
