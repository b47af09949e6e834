#include "wmsudoku/sa_memory.hpp"

#include <algorithm>

#include "wmsudoku/error.hpp"

namespace wmsudoku {

PushResult SAMemory::push(const Observation& obs) {
    if (capacity_ <= 0) throw Error(ErrorCode::ZeroCapacity, "situation memory has no capacity");
    PushResult result;
    if (present_[obs.at.index()]) {
        auto it = std::find_if(queue_.begin(), queue_.end(),
                               [&](const Observation& o) { return o.at == obs.at; });
        queue_.erase(it);
        result.refreshed = true;
    }
    queue_.push_back(obs);
    present_[obs.at.index()] = true;
    if (static_cast<int>(queue_.size()) > capacity_) {
        result.evicted = queue_.front();
        present_[queue_.front().at.index()] = false;
        queue_.pop_front();
    }
    return result;
}

DigitSet SAMemory::visible_candidates(Coord c) const {
    DigitSet s = DigitSet::all();
    for (const Observation& o : queue_) {
        if (is_peer(o.at, c)) s.erase(o.digit);
    }
    return s;
}

}  // namespace wmsudoku
