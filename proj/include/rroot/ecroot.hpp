#pragma once

// "n-th roots" on E: y^2 = x^3 + a4*x + a6 over F_p, p > 3: all P != inf with
// n*P = Q. The multiplication-by-n map is written as
// (U1(x)/V1(x), y*U2(x)/V2(x)) from division polynomials, which turns the
// problem into polynomial root finding over F_p.

#include <compare>
#include <optional>
#include <vector>

#include "rroot/polyring.hpp"
#include "rroot/rthroot.hpp"

namespace rroot {

class Curve {
public:
    /// Requires p > 3 prime and 4*a4^3 + 27*a6^2 != 0.
    Curve(Modulus p, const Natural& a4, const Natural& a6);

    const Modulus& field() const noexcept { return p_; }
    const Residue& a4() const noexcept { return a4_; }
    const Residue& a6() const noexcept { return a6_; }

    /// x^3 + a4*x + a6
    Residue rhs(const Residue& x) const;
    Poly rhs_poly() const;

private:
    Modulus p_;
    Residue a4_;
    Residue a6_;
};

/// Point at infinity or affine (x, y); ordered with infinity first, then
/// lexicographically by (x, y).
struct Point {
    bool infinity = true;
    Natural x;
    Natural y;

    static Point at_infinity() { return {}; }
    static Point affine(Natural x, Natural y) { return {false, std::move(x), std::move(y)}; }

    friend bool operator==(const Point& a, const Point& b)
    {
        if (a.infinity || b.infinity)
            return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const Point& a, const Point& b)
    {
        if (a.infinity || b.infinity)
            return a.infinity && !b.infinity;
        if (a.x != b.x)
            return a.x < b.x;
        return a.y < b.y;
    }
};

bool on_curve(const Curve& curve, const Point& p);
Point negate(const Curve& curve, const Point& p);
Point point_add(const Curve& curve, const Point& p, const Point& q);
Point scalar_mul(const Curve& curve, const Point& p, const Natural& k);

/// n*(x, y) = (u1(x)/v1(x), y*u2(x)/v2(x)) with gcd(u1, v1) = gcd(u2, v2) = 1,
/// deg u1 = n^2, v2 monic.
struct MultiplicationMaps {
    Poly u1;
    Poly v1;
    Poly u2;
    Poly v2;
};

/// Division polynomials psi_0 .. psi_count-1 in the form psi_m = y^[m even] * F_m(x).
std::vector<Poly> division_polynomials(const Curve& curve, std::size_t count);

/// Requires n >= 1 and p not dividing n.
MultiplicationMaps multiplication_maps(const Curve& curve, std::uint64_t n);

/// {P != inf : n*P = Q}, sorted. Every returned point is re-verified.
std::vector<Point> ec_nth_root(const Curve& curve, const Point& q, std::uint64_t n);
std::vector<Point> ec_nth_root(const Curve& curve, const Point& q, std::uint64_t n, const MultiplicationMaps& maps,
                               const FieldProfile& profile);

}  // namespace rroot
