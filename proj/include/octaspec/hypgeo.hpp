#pragma once

// Upper half-space geometry for the word calculus: images of the standard
// ideal triple (0, i, ∞), the geodesic planes they span, distances between
// such planes, and the word-length lower bound J(r).

#include <array>
#include <complex>
#include <span>
#include <variant>

#include "octaspec/exactalg.hpp"

namespace octaspec {

// A point of the Riemann sphere, the boundary of upper half-space.
struct BoundaryPoint {
    std::complex<double> z{};
    bool infinite = false;

    static BoundaryPoint at_infinity() { return {{}, true}; }
    friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

using IdealTriple = std::array<BoundaryPoint, 3>;

struct Circle {
    std::complex<double> center;
    double radius = 0.0;
};

struct Line {
    std::complex<double> point;
    std::complex<double> direction;  // unit modulus
};

// A geodesic plane, identified with its boundary circle or line.
using Plane = std::variant<Circle, Line>;

// Hermitian form [[A, B], [conj B, C]] whose zero set
// A|z|^2 + B conj(z) + conj(B) z + C = 0 is a boundary circle or line.
// Normalized so that |B|^2 - AC = 1.
struct HermitianForm {
    double a = 0.0;
    std::complex<double> b{};
    double c = 0.0;
};

// Same form with exact entries; obtained from a word matrix without rounding.
struct ExactHermitianForm {
    BigInt a;
    BigGaussInt b;
    BigInt c;
};

// The standard plane P over the imaginary axis.
const Plane& standard_plane();
inline constexpr IdealTriple kStandardTriple = {
    BoundaryPoint{{0.0, 0.0}, false}, BoundaryPoint{{0.0, 1.0}, false}, BoundaryPoint{{}, true}};

BoundaryPoint apply_mobius(const Mat2& m, const BoundaryPoint& p);

// Images of (0, i, ∞) under the word's Mobius map, computed from exact
// entries so that poles and ∞ are decided exactly.
IdealTriple image_triple(std::span<const Letter> word);
IdealTriple image_triple(const BigMat2& m);

// Throws std::invalid_argument when two of the points coincide.
Plane plane_through(const IdealTriple& t);

HermitianForm hermitian_form(const Plane& p);

// Inversive product of two boundary circles, up to sign; its modulus is
// invariant under Mobius maps.
double inversive_product(const Plane& p, const Plane& q);

// Hyperbolic distance between two geodesic planes: arccosh |δ| for the
// inversive product δ when |δ| > 1, else 0 (the planes meet or are
// asymptotic).
double plane_distance(const Plane& p, const Plane& q);

// Exact form of the boundary of m(P).
ExactHermitianForm image_of_standard_plane(const BigMat2& m);

// The inversive product of P and m(P), an integer: Re(a conj(d) + b conj(c)).
BigInt standard_plane_product(const BigMat2& m);

// d(w) = distance between P and w(P).
double word_plane_distance(std::span<const Letter> word);
double plane_distance_from_product(const BigInt& product);

// m(H2) is contained in the closure of H2, where H2 is the half-space over
// Re z > 0. Decided exactly.
bool halfspace_nested(std::span<const Letter> word);
bool halfspace_nested(const BigMat2& m);

// The unique J > 0 with (cosh J - 1)(2J + arccosh 3) = 2 arccosh(3) r.
// Throws std::invalid_argument unless r > 0.
double j_of_r(double r);

// Closed-form inverse of j_of_r. Defined for j >= 0 (r_of_j(0) = 0).
double r_of_j(double j);

// Relative residual of the implicit equation at (r, j).
double j_equation_residual(double r, double j);

}  // namespace octaspec
