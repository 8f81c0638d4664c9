#pragma once

// The random gluing model: 4n half-edge slots (four faces per octahedron)
// paired by a uniform perfect matching, each pair carrying a uniform twist in
// {0, 1, 2}. Cycles of the dual graph are read off as words.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "octaspec/exactalg.hpp"

namespace octaspec {

// mt19937_64 plus a bounded-integer draw with a fixed algorithm, so a seed
// gives the same stream with every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
// Seed of trial `index` under `master`; independent of scheduling.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

struct Slot {
    std::uint32_t vertex = 0;
    std::uint8_t face = 0;  // 0..3

    friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct GluedPair {
    Slot first;
    Slot second;
};

struct Gluing {
    std::uint32_t n = 0;
    std::vector<GluedPair> matching;   // 2n pairs
    std::vector<std::uint8_t> twists;  // parallel to matching

    // Index of the pair using `slot`.
    std::vector<std::uint32_t> pair_of_slot() const;
};

// Uniform over all (4n-1)!! · 3^(2n) gluings.
Gluing sample_gluing(std::uint32_t n, std::uint64_t seed);

struct ConditionedSample {
    Gluing gluing;
    std::uint64_t attempts = 0;  // gluings drawn, including the accepted one
};

// Uniform over the gluings whose dual graph is simple, by rejection. A draw
// is abandoned as soon as it creates a loop or a repeated edge. `max_attempts`
// of 0 means unbounded; otherwise ResourceError when exhausted.
ConditionedSample sample_simple_gluing(std::uint32_t n, std::uint64_t seed, std::uint64_t max_attempts = 0);

nlohmann::json to_json(const Gluing& g);
Gluing gluing_from_json(const nlohmann::json& j);

// Undirected multigraph; edge i joins edges[i].first and edges[i].second.
class DualGraph {
public:
    struct Incidence {
        std::uint32_t neighbor;
        std::uint32_t edge;
    };

    DualGraph(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    std::uint32_t vertex_count() const { return n_; }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
    std::span<const Incidence> incident(std::uint32_t v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

private:
    std::uint32_t n_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<std::uint32_t> offsets_;
    std::vector<Incidence> adjacency_;  // a loop appears twice at its vertex
};

// Edge i of the result is matching pair i.
DualGraph dual_graph(const Gluing& g);

bool is_simple(const DualGraph& g);

// vertices[i] and vertices[i+1 mod k] are joined by edges[i].
struct Cycle {
    std::vector<std::uint32_t> vertices;
    std::vector<std::uint32_t> edges;

    std::size_t length() const { return vertices.size(); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline constexpr std::size_t kMaxCycleLength = 16;
inline constexpr std::size_t kDefaultCycleCap = 10'000'000;

// Every cycle with 3..max_len distinct vertices, once each: the smallest
// vertex first and vertices[1] < vertices.back(). Parallel edges give
// distinct cycles. Throws std::invalid_argument if max_len > 16 and
// ResourceError beyond `cap` cycles.
std::vector<Cycle> enumerate_cycles(const DualGraph& g, std::size_t max_len, std::size_t cap = kDefaultCycleCap);

// Face entered and left at each vertex decide the move: leaving through
// face e^1 is S, e^2 is R, e^3 is L (faces numbered 0..3, ^ is xor). Each
// table is an involution, so the move is the same in both traversal
// directions. The twist of a letter is that of the pair it leaves through.
// Reading backwards gives a rotation of w*.
Word cycle_word(const Gluing& g, const Cycle& c, std::size_t start = 0, int direction = 1);

// Number of cycles in each of the given classes, keyed by canonical word.
// Cycles longer than every listed class are not enumerated.
std::map<Word, std::uint64_t> class_counts(const Gluing& g, std::span<const Word> canonical_classes);

// Cycles of each length 3..max_len, indexed by length.
std::vector<std::uint64_t> cycle_length_counts(const DualGraph& g, std::size_t max_len);

// Every radius-l ball contains at most one cycle (edges <= vertices in the
// subgraph induced by the ball).
bool is_tangle_free(const DualGraph& g, std::size_t l);

}  // namespace octaspec
