#pragma once

// Helpers for checking the gluing sampler against the uniform law.

#include <algorithm>
#include <map>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "octaspec/randcomplex.hpp"

namespace octaspec::testing {

// Order-independent description of a gluing: partner of every slot, then
// the twist of each pair listed by its smaller slot.
inline std::vector<std::uint32_t> outcome_key(const Gluing& g) {
    std::vector<std::uint32_t> partner(4 * g.n);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> twist_by_slot;
    for (std::size_t i = 0; i < g.matching.size(); ++i) {
        const auto a = 4 * g.matching[i].first.vertex + g.matching[i].first.face;
        const auto b = 4 * g.matching[i].second.vertex + g.matching[i].second.face;
        partner[a] = b;
        partner[b] = a;
        twist_by_slot.emplace_back(std::min(a, b), g.twists[i]);
    }
    std::sort(twist_by_slot.begin(), twist_by_slot.end());
    for (const auto& [slot, t] : twist_by_slot) partner.push_back(t);
    return partner;
}

using OutcomeHistogram = std::map<std::vector<std::uint32_t>, std::uint64_t>;

inline OutcomeHistogram sample_histogram(std::uint32_t n, std::uint64_t draws, std::uint64_t master) {
    OutcomeHistogram hist;
    for (std::uint64_t i = 0; i < draws; ++i) ++hist[outcome_key(sample_gluing(n, trial_seed(master, i)))];
    return hist;
}

// Upper-tail p-value of Pearson's statistic against `cells` equally likely outcomes.
inline double chi_squared_p(const OutcomeHistogram& hist, std::size_t cells, std::uint64_t draws) {
    const double expected = static_cast<double>(draws) / static_cast<double>(cells);
    double stat = 0.0;
    for (const auto& [key, count] : hist) stat += (count - expected) * (count - expected) / expected;
    stat += static_cast<double>(cells - hist.size()) * expected;  // empty cells
    boost::math::chi_squared dist(static_cast<double>(cells - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace octaspec::testing
