#include "octaspec/hypgeo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace octaspec {

namespace {

const double kArccosh3 = std::acosh(3.0);

std::complex<double> quotient(const BigGaussInt& num, const BigGaussInt& den) {
    // num/den = num·conj(den)/|den|^2, rounded once per component.
    const BigGaussInt top = num * den.conj();
    const BigInt norm = den.re * den.re + den.im * den.im;
    return {mpq_class(top.re, norm).get_d(), mpq_class(top.im, norm).get_d()};
}

bool is_zero(const BigGaussInt& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

BoundaryPoint ratio(const BigGaussInt& num, const BigGaussInt& den) {
    if (is_zero(den)) return BoundaryPoint::at_infinity();
    return {quotient(num, den), false};
}

double big_to_double_log_safe(const BigInt& v) {
    return mpz_sizeinbase(v.get_mpz_t(), 2) < 1000 ? v.get_d() : std::numeric_limits<double>::infinity();
}

}  // namespace

const Plane& standard_plane() {
    static const Plane p = Line{{0.0, 0.0}, {0.0, 1.0}};
    return p;
}

BoundaryPoint apply_mobius(const Mat2& m, const BoundaryPoint& p) {
    const BigMat2 b = to_big(m);
    if (p.infinite) return ratio(b.a, b.c);
    // z is not exact in general, so evaluate in floating point.
    const std::complex<double> z = p.z;
    const std::complex<double> den = b.c.to_complex() * z + b.d.to_complex();
    if (den == std::complex<double>(0.0, 0.0)) return BoundaryPoint::at_infinity();
    return {(b.a.to_complex() * z + b.b.to_complex()) / den, false};
}

IdealTriple image_triple(const BigMat2& m) {
    const BigGaussInt i{BigInt(0), BigInt(1)};
    return {ratio(m.b, m.d), ratio(m.a * i + m.b, m.c * i + m.d), ratio(m.a, m.c)};
}

IdealTriple image_triple(std::span<const Letter> word) { return image_triple(word_matrix_big(word)); }

Plane plane_through(const IdealTriple& t) {
    std::array<std::complex<double>, 3> finite{};
    std::size_t nfinite = 0;
    for (const BoundaryPoint& p : t) {
        if (p.infinite) continue;
        finite[nfinite++] = p.z;
    }
    if (nfinite < 2) throw std::invalid_argument("plane_through: repeated point at infinity");
    double scale = 0.0;
    for (std::size_t i = 0; i < nfinite; ++i) scale = std::max(scale, std::abs(finite[i]));
    const double eps = 1e-13 * std::max(1.0, scale);
    for (std::size_t i = 0; i < nfinite; ++i)
        for (std::size_t j = i + 1; j < nfinite; ++j)
            if (std::abs(finite[i] - finite[j]) <= eps)
                throw std::invalid_argument("plane_through: coincident boundary points");

    const std::complex<double> p = finite[0];
    const std::complex<double> q = finite[1];
    if (nfinite == 2) return Line{p, (q - p) / std::abs(q - p)};

    const std::complex<double> r = finite[2];
    const std::complex<double> u = q - p;
    const std::complex<double> v = r - p;
    const double cross = u.real() * v.imag() - u.imag() * v.real();
    if (std::abs(cross) <= 1e-13 * std::abs(u) * std::abs(v)) return Line{p, u / std::abs(u)};

    // Circumcenter relative to p.
    const double uu = std::norm(u);
    const double vv = std::norm(v);
    const std::complex<double> rel{(v.imag() * uu - u.imag() * vv) / (2.0 * cross),
                                   (u.real() * vv - v.real() * uu) / (2.0 * cross)};
    return Circle{p + rel, std::abs(rel)};
}

HermitianForm hermitian_form(const Plane& plane) {
    if (const auto* c = std::get_if<Circle>(&plane)) {
        const double rho = c->radius;
        return {1.0 / rho, -c->center / rho, (std::norm(c->center) - rho * rho) / rho};
    }
    const auto& line = std::get<Line>(plane);
    const std::complex<double> normal = std::complex<double>(0.0, 1.0) * line.direction;
    return {0.0, normal, -2.0 * (std::conj(normal) * line.point).real()};
}

double inversive_product(const Plane& p, const Plane& q) {
    const HermitianForm f = hermitian_form(p);
    const HermitianForm g = hermitian_form(q);
    return (2.0 * (f.b * std::conj(g.b)).real() - f.a * g.c - g.a * f.c) / 2.0;
}

double plane_distance(const Plane& p, const Plane& q) {
    const double delta = std::abs(inversive_product(p, q));
    return delta > 1.0 ? std::acosh(delta) : 0.0;
}

ExactHermitianForm image_of_standard_plane(const BigMat2& m) {
    // M^{-*} H_P M^{-1} with H_P = [[0, 1], [1, 0]] and M^{-1} = [[d, -b], [-c, a]].
    ExactHermitianForm h;
    h.a = -2 * (m.c * m.d.conj()).re;
    h.b = m.a * m.d.conj() + m.b * m.c.conj();
    h.c = -2 * (m.a * m.b.conj()).re;
    return h;
}

BigInt standard_plane_product(const BigMat2& m) { return image_of_standard_plane(m).b.re; }

double plane_distance_from_product(const BigInt& product) {
    const BigInt mag = abs(product);
    if (mag <= 1) return 0.0;
    const double x = big_to_double_log_safe(mag);
    if (std::isfinite(x)) return std::acosh(x);
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, mag.get_mpz_t());
    return std::log(2.0 * mant) + static_cast<double>(exp2) * std::log(2.0);
}

double word_plane_distance(std::span<const Letter> word) {
    return plane_distance_from_product(standard_plane_product(word_matrix_big(word)));
}

bool halfspace_nested(const BigMat2& m) {
    // m(H2) = {z : A|z|^2 + B conj z + conj B z + C > 0}.
    const ExactHermitianForm h = image_of_standard_plane(m);
    const int sa = sgn(h.a);
    if (sa > 0) return false;  // exterior of a disc
    if (sa < 0) return h.b.re >= 1;  // disc of radius 1/|A| centred at Re B/|A|
    return sgn(h.b.im) == 0 && sgn(h.b.re) > 0 && sgn(h.c) <= 0;
}

bool halfspace_nested(std::span<const Letter> word) { return halfspace_nested(word_matrix_big(word)); }

double r_of_j(double j) {
    if (!(j >= 0.0)) throw std::invalid_argument("r_of_j needs j >= 0");
    return (std::cosh(j) - 1.0) * (2.0 * j + kArccosh3) / (2.0 * kArccosh3);
}

double j_equation_residual(double r, double j) {
    const double rhs = 2.0 * kArccosh3 * r;
    return std::abs((std::cosh(j) - 1.0) * (2.0 * j + kArccosh3) - rhs) / rhs;
}

double j_of_r(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("j_of_r needs finite r > 0");
    const double rhs = 2.0 * kArccosh3 * r;
    auto f = [&](double j) { return (std::cosh(j) - 1.0) * (2.0 * j + kArccosh3) - rhs; };
    auto df = [&](double j) { return std::sinh(j) * (2.0 * j + kArccosh3) + 2.0 * (std::cosh(j) - 1.0); };

    // Seed from the Lambert-W asymptotics, widened until it brackets; the
    // nominal bracket misses the root at both very small and very large r.
    double lo = std::max(0.0, std::log(2.0 * r) - 2.0);
    double hi = std::log(2.0 * r) + 2.0;
    if (hi <= lo) hi = lo + 1.0;
    while (f(lo) > 0.0) lo = lo > 1e-3 ? lo / 2.0 : 0.0;
    while (f(hi) < 0.0) hi = 2.0 * hi + 1.0;

    while (hi - lo > 1e-6 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double j = 0.5 * (lo + hi);
    for (int it = 0; it < 60; ++it) {
        const double fj = f(j);
        if (fj == 0.0) break;
        (fj < 0.0 ? lo : hi) = j;
        double next = j - fj / df(j);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - j) <= 4.0 * std::numeric_limits<double>::epsilon() * j) {
            j = next;
            break;
        }
        j = next;
    }
    return j;
}

}  // namespace octaspec
