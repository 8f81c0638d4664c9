#include "octaspec/randcomplex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "octaspec/errors.hpp"
#include "octaspec/words.hpp"

namespace octaspec {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x5851f42d4c957f2dULL));
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Lemire's multiply-shift with rejection of the biased low region.
    unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(engine_()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

namespace {

Slot slot_at(std::uint32_t index) { return {index / 4, static_cast<std::uint8_t>(index % 4)}; }

std::uint32_t slot_index(const Slot& s) { return 4 * s.vertex + s.face; }

// Draws one gluing. With `simple_only`, gives up (returns false) at the
// first loop or repeated edge.
bool draw(std::uint32_t n, Rng& rng, bool simple_only, Gluing& out, std::vector<std::uint32_t>& pool,
          std::vector<std::uint32_t>& neighbors, std::vector<std::uint8_t>& degree) {
    const std::uint32_t slots = 4 * n;
    pool.resize(slots);
    std::iota(pool.begin(), pool.end(), 0u);
    out.n = n;
    out.matching.clear();
    out.twists.clear();
    if (simple_only) {
        neighbors.assign(slots, 0);
        degree.assign(n, 0);
    }
    for (std::uint32_t remaining = slots; remaining > 0;) {
        const std::uint32_t s = pool[--remaining];
        const auto j = static_cast<std::uint32_t>(rng.below(remaining));
        const std::uint32_t t = pool[j];
        std::swap(pool[j], pool[--remaining]);
        const auto twist = static_cast<std::uint8_t>(rng.below(3));
        const Slot a = slot_at(std::min(s, t));
        const Slot b = slot_at(std::max(s, t));
        if (simple_only) {
            if (a.vertex == b.vertex) return false;
            const std::uint32_t* first = &neighbors[4 * a.vertex];
            if (std::find(first, first + degree[a.vertex], b.vertex) != first + degree[a.vertex]) return false;
            neighbors[4 * a.vertex + degree[a.vertex]++] = b.vertex;
            neighbors[4 * b.vertex + degree[b.vertex]++] = a.vertex;
        }
        out.matching.push_back({a, b});
        out.twists.push_back(twist);
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> Gluing::pair_of_slot() const {
    std::vector<std::uint32_t> out(4 * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < matching.size(); ++i) {
        out[slot_index(matching[i].first)] = static_cast<std::uint32_t>(i);
        out[slot_index(matching[i].second)] = static_cast<std::uint32_t>(i);
    }
    return out;
}

Gluing sample_gluing(std::uint32_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample_gluing needs n >= 1");
    Rng rng(seed);
    Gluing g;
    std::vector<std::uint32_t> pool, neighbors;
    std::vector<std::uint8_t> degree;
    draw(n, rng, false, g, pool, neighbors, degree);
    return g;
}

ConditionedSample sample_simple_gluing(std::uint32_t n, std::uint64_t seed, std::uint64_t max_attempts) {
    if (n == 0) throw std::invalid_argument("sample_simple_gluing needs n >= 1");
    // A simple 4-regular graph needs at least five vertices.
    if (n < 5) throw std::invalid_argument("no simple 4-regular graph on fewer than 5 vertices");
    Rng rng(seed);
    ConditionedSample out;
    std::vector<std::uint32_t> pool, neighbors;
    std::vector<std::uint8_t> degree;
    while (true) {
        if (max_attempts != 0 && out.attempts == max_attempts)
            throw ResourceError("rejection sampler exhausted its attempt budget");
        ++out.attempts;
        if (draw(n, rng, true, out.gluing, pool, neighbors, degree)) return out;
    }
}

nlohmann::json to_json(const Gluing& g) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const GluedPair& p : g.matching)
        pairs.push_back({{"u", p.first.vertex}, {"u_face", p.first.face}, {"v", p.second.vertex}, {"v_face", p.second.face}});
    return {{"n", g.n}, {"matching", std::move(pairs)}, {"twists", g.twists}};
}

Gluing gluing_from_json(const nlohmann::json& j) {
    Gluing g;
    g.n = j.at("n").get<std::uint32_t>();
    std::vector<bool> used(4 * static_cast<std::size_t>(g.n), false);
    auto take = [&](std::uint32_t v, std::uint32_t f) {
        if (v >= g.n || f > 3) throw std::invalid_argument("gluing: slot out of range");
        const Slot s{v, static_cast<std::uint8_t>(f)};
        if (used[slot_index(s)]) throw std::invalid_argument("gluing: slot used twice");
        used[slot_index(s)] = true;
        return s;
    };
    for (const auto& p : j.at("matching")) {
        const Slot a = take(p.at("u").get<std::uint32_t>(), p.at("u_face").get<std::uint32_t>());
        const Slot b = take(p.at("v").get<std::uint32_t>(), p.at("v_face").get<std::uint32_t>());
        g.matching.push_back({a, b});
    }
    for (const auto& t : j.at("twists")) {
        const auto v = t.get<std::uint32_t>();
        if (v > 2) throw std::invalid_argument("gluing: twist out of range");
        g.twists.push_back(static_cast<std::uint8_t>(v));
    }
    if (g.matching.size() != 2 * static_cast<std::size_t>(g.n) || g.twists.size() != g.matching.size())
        throw std::invalid_argument("gluing: wrong number of pairs");
    return g;
}

DualGraph::DualGraph(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : n_(n), edges_(std::move(edges)), offsets_(static_cast<std::size_t>(n) + 1, 0) {
    for (const auto& [u, v] : edges_) {
        if (u >= n || v >= n) throw std::invalid_argument("DualGraph: vertex out of range");
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adjacency_.resize(offsets_.back());
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
        const auto [u, v] = edges_[e];
        adjacency_[fill[u]++] = {v, e};
        adjacency_[fill[v]++] = {u, e};
    }
}

DualGraph dual_graph(const Gluing& g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(g.matching.size());
    for (const GluedPair& p : g.matching) edges.emplace_back(p.first.vertex, p.second.vertex);
    return DualGraph(g.n, std::move(edges));
}

bool is_simple(const DualGraph& g) {
    std::vector<std::uint32_t> seen;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        seen.clear();
        for (const auto& inc : g.incident(v)) {
            if (inc.neighbor == v) return false;
            seen.push_back(inc.neighbor);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

namespace {

class CycleSearch {
public:
    CycleSearch(const DualGraph& g, std::size_t max_len, std::size_t cap)
        : g_(g), max_len_(max_len), cap_(cap), on_path_(g.vertex_count(), false) {}

    std::vector<Cycle> run() {
        for (std::uint32_t s = 0; s < g_.vertex_count(); ++s) {
            start_ = s;
            path_.assign(1, s);
            on_path_[s] = true;
            extend(s);
            on_path_[s] = false;
        }
        return std::move(found_);
    }

private:
    void extend(std::uint32_t u) {
        for (const auto& inc : g_.incident(u)) {
            const std::uint32_t x = inc.neighbor;
            if (x == start_) {
                if (path_.size() >= 3 && path_[1] < path_.back()) {
                    if (found_.size() == cap_) throw ResourceError("cycle count exceeds the configured cap");
                    Cycle c{path_, edges_};
                    c.edges.push_back(inc.edge);
                    found_.push_back(std::move(c));
                }
            } else if (x > start_ && !on_path_[x] && path_.size() < max_len_) {
                on_path_[x] = true;
                path_.push_back(x);
                edges_.push_back(inc.edge);
                extend(x);
                edges_.pop_back();
                path_.pop_back();
                on_path_[x] = false;
            }
        }
    }

    const DualGraph& g_;
    std::size_t max_len_;
    std::size_t cap_;
    std::vector<bool> on_path_;
    std::uint32_t start_ = 0;
    std::vector<std::uint32_t> path_;
    std::vector<std::uint32_t> edges_;
    std::vector<Cycle> found_;
};

std::uint8_t face_at(const Gluing& g, std::uint32_t edge, std::uint32_t vertex) {
    const GluedPair& p = g.matching[edge];
    return p.first.vertex == vertex ? p.first.face : p.second.face;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const DualGraph& g, std::size_t max_len, std::size_t cap) {
    if (max_len > kMaxCycleLength) throw std::invalid_argument("enumerate_cycles: max_len above 16");
    if (max_len < 3) return {};
    return CycleSearch(g, max_len, cap).run();
}

Word cycle_word(const Gluing& g, const Cycle& c, std::size_t start, int direction) {
    const std::size_t k = c.length();
    if (k == 0 || start >= k || (direction != 1 && direction != -1))
        throw std::invalid_argument("cycle_word: bad start or direction");
    static constexpr Direction kMove[4] = {Direction::S, Direction::S, Direction::R, Direction::L};
    Word w(k);
    for (std::size_t m = 0; m < k; ++m) {
        const std::size_t i = direction == 1 ? (start + m) % k : (start + k - m) % k;
        const std::uint32_t before = c.edges[(i + k - 1) % k];
        const std::uint32_t after = c.edges[i];
        const std::uint32_t entry = direction == 1 ? before : after;
        const std::uint32_t exit = direction == 1 ? after : before;
        const std::uint32_t v = c.vertices[i];
        const unsigned turn = face_at(g, entry, v) ^ face_at(g, exit, v);
        if (turn == 0) throw std::invalid_argument("cycle_word: entry and exit through the same face");
        w[m] = Letter{kMove[turn], g.twists[exit]};
    }
    return w;
}

std::map<Word, std::uint64_t> class_counts(const Gluing& g, std::span<const Word> canonical_classes) {
    std::map<Word, std::uint64_t> counts;
    std::size_t max_len = 0;
    std::set<std::size_t> lengths;
    for (const Word& w : canonical_classes) {
        counts.emplace(w, 0);
        max_len = std::max(max_len, w.size());
        lengths.insert(w.size());
    }
    if (counts.empty()) return counts;
    for (const Cycle& c : enumerate_cycles(dual_graph(g), max_len)) {
        if (!lengths.count(c.length())) continue;
        const auto it = counts.find(canonical(cycle_word(g, c)));
        if (it != counts.end()) ++it->second;
    }
    return counts;
}

std::vector<std::uint64_t> cycle_length_counts(const DualGraph& g, std::size_t max_len) {
    std::vector<std::uint64_t> out(max_len + 1, 0);
    for (const Cycle& c : enumerate_cycles(g, max_len)) ++out[c.length()];
    return out;
}

bool is_tangle_free(const DualGraph& g, std::size_t l) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::uint32_t> stamp(n, 0), depth(n, 0), ball;
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint32_t mark = v + 1;
        ball.assign(1, v);
        stamp[v] = mark;
        depth[v] = 0;
        for (std::size_t head = 0; head < ball.size(); ++head) {
            const std::uint32_t u = ball[head];
            if (depth[u] == l) continue;
            for (const auto& inc : g.incident(u)) {
                if (stamp[inc.neighbor] == mark) continue;
                stamp[inc.neighbor] = mark;
                depth[inc.neighbor] = depth[u] + 1;
                ball.push_back(inc.neighbor);
            }
        }
        std::size_t incidences = 0;
        for (const std::uint32_t u : ball)
            for (const auto& inc : g.incident(u))
                if (stamp[inc.neighbor] == mark) ++incidences;
        if (incidences / 2 > ball.size()) return false;
    }
    return true;
}

}  // namespace octaspec
