#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace wmsudoku {

/// Purpose tags separating the independent random streams of a run.
enum class StreamTag : std::uint64_t {
    SocietyInit = 1,
    Puzzle = 2,
    PuzzleFill = 3,
    PuzzleRemoval = 4,
};

std::uint64_t mix64(std::uint64_t x);

/// Derives a stream key from (seed, tag, index). Pure; identical on every platform.
std::uint64_t derive_key(std::uint64_t seed, StreamTag tag, std::uint64_t index);

/// SplitMix64 sequence started from a derived key. Bounded integers use
/// rejection sampling so results never depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t key) : state_(key) {}
    Rng(std::uint64_t seed, StreamTag tag, std::uint64_t index) : state_(derive_key(seed, tag, index)) {}

    std::uint64_t next();
    // Uniform on [0, 1).
    double uniform();
    // Uniform on [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace wmsudoku
