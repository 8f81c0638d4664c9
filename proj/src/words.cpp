#include "octaspec/words.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "octaspec/errors.hpp"
#include "octaspec/hypgeo.hpp"

namespace octaspec {

namespace {

// Position of a direction in the cyclic order (R S L) that the A
// transformation walks along.
int cycle_index(Direction d) {
    switch (d) {
        case Direction::R: return 0;
        case Direction::S: return 1;
        case Direction::L: return 2;
    }
    return 0;
}

Direction from_cycle_index(int i) {
    static constexpr Direction kOrder[3] = {Direction::R, Direction::S, Direction::L};
    return kOrder[((i % 3) + 3) % 3];
}

int mod3(int v) { return ((v % 3) + 3) % 3; }

std::uint8_t twist_plus(std::uint8_t t, int by) { return static_cast<std::uint8_t>(mod3(t + by)); }

// Normalized twists u_i = Θ_i - D_i - D_{i+1} (mod 3). Two words lie in the
// same A-orbit iff their u vectors agree: the A action is free and each
// orbit holds exactly one word whose directions are all R.
std::vector<std::uint8_t> normalized_twists(std::span<const Letter> w) {
    const std::size_t k = w.size();
    std::vector<std::uint8_t> u(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Letter& cur = w[i];
        const Letter& next = w[(i + 1) % k];
        u[i] = static_cast<std::uint8_t>(
            mod3(cur.twist - cycle_index(cur.direction) - cycle_index(next.direction)));
    }
    return u;
}

// Lexicographically least word with the given normalized twists: first
// letter S, every later twist forced to 0 except the last.
Word least_word_with_twists(std::span<const std::uint8_t> u) {
    const std::size_t k = u.size();
    Word w(k);
    int d = cycle_index(Direction::S);
    for (std::size_t i = 0; i < k; ++i) {
        w[i].direction = from_cycle_index(d);
        if (i + 1 < k) {
            const int next = mod3(-static_cast<int>(u[i]) - d);
            w[i].twist = 0;
            d = next;
        } else {
            w[i].twist = static_cast<std::uint8_t>(mod3(u[i] + d + cycle_index(Direction::S)));
        }
    }
    return w;
}

// The 2k images of u under rotation and the reversal induced by star.
std::vector<std::vector<std::uint8_t>> dihedral_images(std::span<const std::uint8_t> u) {
    const std::size_t k = u.size();
    std::vector<std::uint8_t> reflected(k);
    for (std::size_t m = 0; m < k; ++m) reflected[m] = u[(2 * k - 2 - m) % k];
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(2 * k);
    for (std::size_t r = 0; r < k; ++r) {
        std::vector<std::uint8_t> v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = u[(i + r) % k];
        out.push_back(std::move(v));
    }
    for (std::size_t r = 0; r < k; ++r) {
        std::vector<std::uint8_t> v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = reflected[(i + r) % k];
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t distinct_images(std::span<const Letter> word) {
    auto images = dihedral_images(normalized_twists(word));
    std::sort(images.begin(), images.end());
    return static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
}

void require_nonempty(std::span<const Letter> word) {
    if (word.empty()) throw std::invalid_argument("word must be nonempty");
}

}  // namespace

Word a_transform(std::span<const Letter> word, std::size_t site) {
    require_nonempty(word);
    const std::size_t k = word.size();
    if (site >= k) throw std::out_of_range("a_transform site out of range");
    Word w(word.begin(), word.end());
    const std::size_t prev = (site + k - 1) % k;
    w[prev].twist = twist_plus(w[prev].twist, 1);
    w[site].twist = twist_plus(w[site].twist, 1);
    w[site].direction = from_cycle_index(cycle_index(w[site].direction) + 1);
    return w;
}

Word star(std::span<const Letter> word) {
    require_nonempty(word);
    const std::size_t k = word.size();
    Word w(k);
    for (std::size_t m = 0; m < k; ++m) {
        w[m].direction = word[k - 1 - m].direction;
        w[m].twist = word[(2 * k - 2 - m) % k].twist;
    }
    return w;
}

Word rotate(std::span<const Letter> word, std::size_t shift) {
    require_nonempty(word);
    const std::size_t k = word.size();
    Word w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = word[(i + shift) % k];
    return w;
}

std::set<Word> orbit(std::span<const Letter> word, std::size_t max_length) {
    require_nonempty(word);
    if (word.size() > max_length)
        throw ResourceError("orbit closure refused for word length " + std::to_string(word.size()));
    std::set<Word> seen;
    std::deque<Word> queue;
    seen.emplace(word.begin(), word.end());
    queue.emplace_back(word.begin(), word.end());
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        std::vector<Word> next;
        next.reserve(cur.size() + 2);
        for (std::size_t i = 0; i < cur.size(); ++i) next.push_back(a_transform(cur, i));
        next.push_back(rotate(cur, 1));
        next.push_back(star(cur));
        for (Word& n : next)
            if (seen.insert(n).second) queue.push_back(std::move(n));
    }
    return seen;
}

Word canonical(std::span<const Letter> word) {
    require_nonempty(word);
    std::optional<Word> best;
    for (const auto& image : dihedral_images(normalized_twists(word))) {
        Word candidate = least_word_with_twists(image);
        if (!best || candidate < *best) best = std::move(candidate);
    }
    return *best;
}

BigInt orbit_size(std::span<const Letter> word) {
    require_nonempty(word);
    BigInt size;
    mpz_ui_pow_ui(size.get_mpz_t(), 3, word.size());
    size *= static_cast<unsigned long>(distinct_images(word));
    return size;
}

double orbit_fraction(std::span<const Letter> word) {
    require_nonempty(word);
    return static_cast<double>(distinct_images(word)) / static_cast<double>(2 * word.size());
}

WordClass class_of(std::span<const Letter> word) {
    require_nonempty(word);
    WordClass wc;
    wc.canonical = canonical(word);
    wc.orbit_size = orbit_size(word);
    wc.length = word.size();
    wc.trace = word_trace(wc.canonical);
    wc.translation_length = translation_length(wc.trace);
    // Orbit members are conjugate in PSL(2,C): traces agree up to sign.
    const BigGaussInt own = word_trace(word);
    if (!(own == wc.trace || own == -wc.trace))
        throw std::logic_error("trace not invariant on class of " + to_string(word));
    return wc;
}

namespace {

struct Searcher {
    double a;
    double b;
    std::size_t cap;
    const EnumerationOptions& options;
    Enumeration& out;
    Word prefix;

    // Every canonical word is S · D_1 · ... · D_{k-2} (twists 0) followed by
    // one free letter, so the search runs over such prefixes only. A prefix
    // p of w satisfies d(p) <= d(w) <= l(w), so d(p) > b prunes the subtree.
    void extend(const BigMat2& m) {
        ++out.nodes_visited;
        if (prefix.size() + 1 >= 3 && prefix.size() + 1 <= cap) emit_completions(m);
        if (prefix.size() + 1 >= cap) return;
        for (Direction d : {Direction::S, Direction::R, Direction::L}) {
            const Letter l{d, 0};
            BigMat2 next = m * to_big(letter_matrix(l));
            if (plane_distance_from_product(standard_plane_product(next)) > b + kLengthTolerance) continue;
            prefix.push_back(l);
            extend(next);
            prefix.pop_back();
        }
    }

    void emit_completions(const BigMat2& m) {
        for (const Letter& last : kAllLetters) {
            prefix.push_back(last);
            const BigMat2 full = m * to_big(letter_matrix(last));
            consider(full);
            prefix.pop_back();
        }
    }

    void consider(const BigMat2& full) {
        const BigGaussInt tr = full.trace();
        if (!is_loxodromic_trace(tr)) return;
        const double len = translation_length(tr);
        if (len < a - kLengthTolerance || len > b + kLengthTolerance) return;
        if (canonical(prefix) != prefix) return;
        const bool small = tr.re * tr.re + tr.im * tr.im <= 4;
        if (small) {
            ++out.filter_disagreements;
            if (options.strict_trace) return;
        }
        SpectralLine line;
        line.word_class.canonical = prefix;
        line.word_class.orbit_size = orbit_size(prefix);
        line.word_class.length = prefix.size();
        line.word_class.trace = tr;
        line.word_class.translation_length = len;
        line.intensity = orbit_fraction(prefix);
        line.small_trace = small;
        out.lines.push_back(std::move(line));
    }
};

}  // namespace

Enumeration enumerate_classes(double a, double b, const EnumerationOptions& options) {
    if (!(a >= 0.0) || !(b >= a) || !std::isfinite(b))
        throw std::invalid_argument("enumerate_classes needs 0 <= a <= b < inf");
    if (b > options.feasibility_ceiling)
        throw ResourceError("upper length " + std::to_string(b) + " exceeds feasibility ceiling " +
                            std::to_string(options.feasibility_ceiling));
    Enumeration out;
    std::size_t cap = b > 0.0 ? static_cast<std::size_t>(std::floor(r_of_j(b))) : 0;
    if (options.max_word_length) cap = std::min(cap, *options.max_word_length);
    out.word_length_cap = cap;
    if (cap < 3) return out;

    Searcher search{a, b, cap, options, out, {Letter{Direction::S, 0}}};
    search.extend(to_big(letter_matrix(Letter{Direction::S, 0})));

    std::sort(out.lines.begin(), out.lines.end(), [](const SpectralLine& x, const SpectralLine& y) {
        if (x.word_class.translation_length != y.word_class.translation_length)
            return x.word_class.translation_length < y.word_class.translation_length;
        return x.word_class.canonical < y.word_class.canonical;
    });
    return out;
}

}  // namespace octaspec
