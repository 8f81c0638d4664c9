#pragma once

// The nine gluing isometries in SL(2, Z[i]), words over them, and the
// translation length of a word's matrix.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "octaspec/gaussint.hpp"

namespace octaspec {

// Enumerator order is the canonical comparison order: S < R < L.
enum class Direction : std::uint8_t { S = 0, R = 1, L = 2 };

char to_char(Direction d);

struct Letter {
    Direction direction = Direction::S;
    std::uint8_t twist = 0;  // exponent of theta, 0..2

    friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

inline constexpr std::array<Letter, 9> kAllLetters = {{
    {Direction::S, 0}, {Direction::S, 1}, {Direction::S, 2},
    {Direction::R, 0}, {Direction::R, 1}, {Direction::R, 2},
    {Direction::L, 0}, {Direction::L, 1}, {Direction::L, 2},
}};

// A word w1 Θ1 · w2 Θ2 · ... · wk Θk, stored as its letters.
using Word = std::vector<Letter>;

// Text form: each letter is its direction followed by the twist digit when
// nonzero, e.g. "SR1" is S · Rθ and "RLRR" has all twists zero.
std::string to_string(std::span<const Letter> word);
std::string to_string(Letter letter);
Word parse_word(std::string_view text);  // throws std::invalid_argument

// Exact matrix from the table of nine generators. The listed SL(2,Z[i])
// representatives are used verbatim; several differ in sign from the
// product X·θ^j, which is invisible in PSL(2,C).
const Mat2& letter_matrix(Letter letter);

// Product M(w1Θ1) · M(w2Θ2) · ... · M(wkΘk), left to right. This is the only
// composition order under which the A and star equivalences preserve length.
// Throws ArithmeticOverflow if an entry leaves the 128-bit range.
Mat2 word_matrix(std::span<const Letter> word);
BigMat2 word_matrix_big(std::span<const Letter> word);

GaussInt trace(const Mat2& m);
BigGaussInt trace(const BigMat2& m);

// Exact trace of the word matrix; uses the 128-bit path and falls back to
// GMP on overflow.
BigGaussInt word_trace(std::span<const Letter> word);

// 2·|Re arccosh(t/2)|. Zero exactly when t is real and in [-2, 2].
double translation_length(std::complex<double> t);
double translation_length(const GaussInt& t);
double translation_length(const BigGaussInt& t);

// True iff the trace lies off the real segment [-2, 2].
bool is_loxodromic_trace(const BigGaussInt& t);

enum class IsometryKind { identity, parabolic, elliptic, loxodromic };

std::string_view to_string(IsometryKind kind);

// identity: ±Id. parabolic: trace ±2, not ±Id. elliptic: real trace in
// (-2, 2). loxodromic: everything else.
IsometryKind classify_isometry(const Mat2& m);
IsometryKind classify_isometry(const BigMat2& m);

}  // namespace octaspec
