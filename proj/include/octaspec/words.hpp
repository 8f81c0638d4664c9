#pragma once

// Word equivalence: the A transformations (changing the cyclic order of the
// ideal coordinates at one octahedron), cyclic permutation, and the reversal
// w*. Classes [w] are orbits under all three.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "octaspec/exactalg.hpp"

namespace octaspec {

// Change of coordinate order at `site` (0-based): Θ_{site-1} and Θ_site are
// multiplied by θ, and the direction at `site` advances along (R S L).
Word a_transform(std::span<const Letter> word, std::size_t site);

// w* = w_k Θ_{k-1} · w_{k-1} Θ_{k-2} · ... · w_2 Θ_1 · w_1 Θ_k.
Word star(std::span<const Letter> word);

// Cyclic rotation moving letter `shift` to the front.
Word rotate(std::span<const Letter> word, std::size_t shift);

// Brute-force closure under every a_transform, rotation and star. Exponential
// in |w|; throws ResourceError above `max_length`.
std::set<Word> orbit(std::span<const Letter> word, std::size_t max_length = 10);

// Lexicographic minimum of the orbit (letters compared S<R<L, then twist).
// Computed without materializing the orbit; see words.cpp.
Word canonical(std::span<const Letter> word);

// Number of distinct words in the orbit, 3^|w| times the size of the
// dihedral orbit of the word's normalized twist vector.
BigInt orbit_size(std::span<const Letter> word);

// |[w]| / (2 |w| 3^|w|), i.e. 1 / |stabilizer|. Exact in double.
double orbit_fraction(std::span<const Letter> word);

struct WordClass {
    Word canonical;
    BigInt orbit_size;
    std::size_t length = 0;
    BigGaussInt trace;
    double translation_length = 0.0;
};

WordClass class_of(std::span<const Letter> word);

struct SpectralLine {
    WordClass word_class;
    double intensity = 0.0;
    // |trace| <= 2 while the length is positive: kept by the length filter,
    // dropped by the strict |tr| > 2 filter.
    bool small_trace = false;
};

struct EnumerationOptions {
    double feasibility_ceiling = 6.0;
    // Overrides the J(r) length cap when set (never raises it).
    std::optional<std::size_t> max_word_length;
    // Also require |tr| > 2.
    bool strict_trace = false;
};

struct Enumeration {
    std::vector<SpectralLine> lines;  // sorted by (length, canonical word)
    std::size_t word_length_cap = 0;
    std::size_t nodes_visited = 0;
    std::size_t filter_disagreements = 0;
};

// One line per class with |w| > 2, loxodromic matrix and length in [a, b]
// (1e-9 slack at both ends). Throws std::invalid_argument on a bad interval
// and ResourceError when b exceeds the feasibility ceiling.
Enumeration enumerate_classes(double a, double b, const EnumerationOptions& options = {});

inline constexpr double kLengthTolerance = 1e-9;

}  // namespace octaspec
