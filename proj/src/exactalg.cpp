#include "octaspec/exactalg.hpp"

#include <cmath>
#include <stdexcept>

namespace octaspec {

char to_char(Direction d) {
    switch (d) {
        case Direction::S: return 'S';
        case Direction::R: return 'R';
        case Direction::L: return 'L';
    }
    return '?';
}

std::string to_string(Letter letter) {
    std::string s(1, to_char(letter.direction));
    if (letter.twist != 0) s.push_back(static_cast<char>('0' + letter.twist));
    return s;
}

std::string to_string(std::span<const Letter> word) {
    std::string s;
    s.reserve(word.size() * 2);
    for (const Letter& l : word) s += to_string(l);
    return s;
}

Word parse_word(std::string_view text) {
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        Letter l;
        switch (text[i]) {
            case 'S': l.direction = Direction::S; break;
            case 'R': l.direction = Direction::R; break;
            case 'L': l.direction = Direction::L; break;
            default:
                throw std::invalid_argument("bad letter '" + std::string(1, text[i]) + "' in word");
        }
        if (i + 1 < text.size() && text[i + 1] >= '0' && text[i + 1] <= '2') {
            l.twist = static_cast<std::uint8_t>(text[i + 1] - '0');
            ++i;
        }
        w.push_back(l);
    }
    if (w.empty()) throw std::invalid_argument("empty word");
    return w;
}

namespace {

GaussInt gi(long long re, long long im) { return {CheckedInt128(re), CheckedInt128(im)}; }

// Indexed by 3 * direction + twist.
const std::array<Mat2, 9>& generator_table() {
    static const std::array<Mat2, 9> table = {{
        // S, Sθ, Sθ²
        {gi(1, 0), gi(1, 0), gi(0, 0), gi(1, 0)},
        {gi(0, 1), gi(1, 1), gi(0, 1), gi(1, 0)},
        {gi(-1, 1), gi(0, 1), gi(0, 1), gi(0, 0)},
        // R, Rθ, Rθ²
        {gi(-1, 0), gi(0, 1), gi(-1, 1), gi(0, 1)},
        {gi(1, 0), gi(0, 0), gi(1, 0), gi(1, 0)},
        {gi(0, 0), gi(0, 1), gi(0, 1), gi(1, 1)},
        // L, Lθ, Lθ²
        {gi(0, 1), gi(0, 1), gi(1, 1), gi(1, 0)},
        {gi(-1, 0), gi(-1, 1), gi(0, 1), gi(0, 1)},  // c = i; the printed -i gives det -1-2i
        {gi(1, 1), gi(1, 0), gi(1, 0), gi(1, -1)},
    }};
    return table;
}

}  // namespace

const Mat2& letter_matrix(Letter letter) {
    if (letter.twist > 2) throw std::invalid_argument("twist out of range");
    return generator_table()[3 * static_cast<std::size_t>(letter.direction) + letter.twist];
}

Mat2 word_matrix(std::span<const Letter> word) {
    Mat2 m = Mat2::identity();
    for (const Letter& l : word) m = m * letter_matrix(l);
    return m;
}

BigMat2 word_matrix_big(std::span<const Letter> word) {
    BigMat2 m = BigMat2::identity();
    for (const Letter& l : word) m = m * to_big(letter_matrix(l));
    return m;
}

GaussInt trace(const Mat2& m) { return m.trace(); }
BigGaussInt trace(const BigMat2& m) { return m.trace(); }

BigGaussInt word_trace(std::span<const Letter> word) {
    try {
        return to_big(trace(word_matrix(word)));
    } catch (const ArithmeticOverflow&) {
        return trace(word_matrix_big(word));
    }
}

double translation_length(std::complex<double> t) {
    if (t.imag() == 0.0 && std::abs(t.real()) <= 2.0) return 0.0;
    return 2.0 * std::abs(std::acosh(t / 2.0).real());
}

double translation_length(const GaussInt& t) { return translation_length(t.to_complex()); }

double translation_length(const BigGaussInt& t) {
    // Beyond double range use 2·Re arccosh(t/2) = 2·log|t| + O(|t|^-2).
    const BigInt norm = t.re * t.re + t.im * t.im;
    if (mpz_sizeinbase(norm.get_mpz_t(), 2) < 1000) return translation_length(t.to_complex());
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, norm.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

bool is_loxodromic_trace(const BigGaussInt& t) { return sgn(t.im) != 0 || abs(t.re) > 2; }

std::string_view to_string(IsometryKind kind) {
    switch (kind) {
        case IsometryKind::identity: return "identity";
        case IsometryKind::parabolic: return "parabolic";
        case IsometryKind::elliptic: return "elliptic";
        case IsometryKind::loxodromic: return "loxodromic";
    }
    return "?";
}

IsometryKind classify_isometry(const BigMat2& m) {
    const BigMat2 id = BigMat2::identity();
    if (m == id || m == -id) return IsometryKind::identity;
    const BigGaussInt t = m.trace();
    if (sgn(t.im) == 0) {
        if (abs(t.re) == 2) return IsometryKind::parabolic;
        if (abs(t.re) < 2) return IsometryKind::elliptic;
    }
    return IsometryKind::loxodromic;
}

IsometryKind classify_isometry(const Mat2& m) { return classify_isometry(to_big(m)); }

}  // namespace octaspec
