#include "octaspec/gaussint.hpp"

#include <algorithm>
#include <sstream>

namespace octaspec {

BigInt CheckedInt128::to_big() const {
    const bool neg = v_ < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
    const auto hi = static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64));
    const auto lo = static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
    BigInt r = hi;
    r <<= 64;
    r += lo;
    if (neg) r = -r;
    return r;
}

std::string CheckedInt128::to_string() const {
    if (v_ == 0) return "0";
    const bool neg = v_ < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
    std::string s;
    while (mag != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

BigGaussInt to_big(const GaussInt& z) { return {z.re.to_big(), z.im.to_big()}; }

BigMat2 to_big(const Mat2& m) { return {to_big(m.a), to_big(m.b), to_big(m.c), to_big(m.d)}; }

namespace {

// "a+bi" with zero parts and unit coefficients elided.
std::string format_gauss(int im_sign, const std::string& re_s, const std::string& im_abs) {
    const bool re_zero = re_s == "0";
    if (im_sign == 0) return re_s;
    std::string out = re_zero ? "" : re_s;
    if (im_sign < 0)
        out += "-";
    else if (!re_zero)
        out += "+";
    if (im_abs != "1") out += im_abs;
    out += "i";
    return out;
}

}  // namespace

std::string to_string(const GaussInt& z) {
    const int sign = z.im == CheckedInt128(0) ? 0 : (z.im < CheckedInt128(0) ? -1 : 1);
    const std::string im_abs = (sign < 0 ? -z.im : z.im).to_string();
    return format_gauss(sign, z.re.to_string(), im_abs);
}

std::string to_string(const BigGaussInt& z) {
    const int sign = sgn(z.im);
    const BigInt im_abs = abs(z.im);
    return format_gauss(sign, z.re.get_str(), im_abs.get_str());
}

std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << to_string(z); }
std::ostream& operator<<(std::ostream& os, const BigGaussInt& z) { return os << to_string(z); }

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

}  // namespace octaspec
