#include "rroot/ecroot.hpp"

#include <algorithm>

#include "rroot/polysolve.hpp"

namespace rroot {

namespace {

Natural nat(std::uint64_t v)
{
    return Natural(static_cast<unsigned long>(v));
}

Poly cube(const Poly& f)
{
    return f * f * f;
}

Poly exact_quotient(const Poly& f, const Poly& g)
{
    auto [q, r] = divrem(f, g);
    if (!r.is_zero())
        throw std::logic_error("inexact polynomial division");
    return q;
}

/// Both square roots of v (one when v = 0, none for a nonresidue).
std::vector<Residue> square_roots(const FieldProfile& profile, const Residue& v)
{
    if (v.is_zero())
        return {v};
    auto s = rth_root(profile, 2, v);
    if (!s)
        return {};
    return {*s, -*s};
}

}  // namespace

Curve::Curve(Modulus p, const Natural& a4, const Natural& a6) : p_(std::move(p)), a4_(p_(a4)), a6_(p_(a6))
{
    if (p_.value() <= 3 || mpz_probab_prime_p(p_.value().get_mpz_t(), 30) == 0)
        throw std::invalid_argument("curve needs a prime field of characteristic > 3");
    const Residue disc = p_(4) * a4_ * a4_ * a4_ + p_(27) * a6_ * a6_;
    if (disc.is_zero())
        throw std::invalid_argument("singular curve: 4*a4^3 + 27*a6^2 = 0");
}

Residue Curve::rhs(const Residue& x) const
{
    return (x * x + a4_) * x + a6_;
}

Poly Curve::rhs_poly() const
{
    return Poly(p_, {a6_.value(), a4_.value(), Natural(0), Natural(1)});
}

bool on_curve(const Curve& curve, const Point& p)
{
    if (p.infinity)
        return true;
    const Modulus& m = curve.field();
    if (p.x >= m.value() || p.y >= m.value() || sgn(p.x) < 0 || sgn(p.y) < 0)
        return false;
    const Residue y = m(p.y);
    return y * y == curve.rhs(m(p.x));
}

Point negate(const Curve& curve, const Point& p)
{
    if (p.infinity)
        return p;
    return Point::affine(p.x, (-curve.field()(p.y)).value());
}

Point point_add(const Curve& curve, const Point& p, const Point& q)
{
    if (p.infinity)
        return q;
    if (q.infinity)
        return p;
    const Modulus& m = curve.field();
    const Residue x1 = m(p.x), y1 = m(p.y), x2 = m(q.x), y2 = m(q.y);
    Residue lambda = m.zero();
    if (x1 == x2) {
        if (!(y1 + y2).is_zero() && y1 == y2) {
            lambda = (m(3) * x1 * x1 + curve.a4()) * (m(2) * y1).inverse();
        } else {
            return Point::at_infinity();
        }
    } else {
        lambda = (y2 - y1) * (x2 - x1).inverse();
    }
    const Residue x3 = lambda * lambda - x1 - x2;
    const Residue y3 = lambda * (x1 - x3) - y1;
    return Point::affine(x3.value(), y3.value());
}

Point scalar_mul(const Curve& curve, const Point& p, const Natural& k)
{
    if (sgn(k) < 0)
        return scalar_mul(curve, negate(curve, p), -k);
    Point acc = Point::at_infinity();
    const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    if (sgn(k) == 0)
        return acc;
    for (std::size_t i = bits; i-- > 0;) {
        acc = point_add(curve, acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), i))
            acc = point_add(curve, acc, p);
    }
    return acc;
}

std::vector<Poly> division_polynomials(const Curve& curve, std::size_t count)
{
    const Modulus& m = curve.field();
    const Residue a4 = curve.a4();
    const Residue a6 = curve.a6();
    const Poly y2 = curve.rhs_poly();
    const Poly y4 = y2 * y2;
    const Residue half = m(2).inverse();

    std::vector<Poly> F;
    F.reserve(std::max<std::size_t>(count, 5));
    F.push_back(Poly(m));
    F.push_back(Poly::constant(m.one()));
    F.push_back(Poly::constant(m(2)));
    F.push_back(Poly(m, {(-(a4 * a4)).value(), (m(12) * a6).value(), (m(6) * a4).value(), Natural(0),
                         Natural(3)}));
    F.push_back(Poly(m, {(-(m(8) * a6 * a6) - a4 * a4 * a4).value(), (-(m(4) * a4 * a6)).value(),
                         (-(m(5) * a4 * a4)).value(), (m(20) * a6).value(), (m(5) * a4).value(), Natural(0),
                         Natural(1)})
                * m(4));
    for (std::size_t n = 5; n < count; ++n) {
        const std::size_t k = n / 2;
        if (n % 2 == 1) {
            // psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k-1} psi_{k+1}^3, with y^4 -> Y^2.
            if (k % 2 == 0)
                F.push_back(F[k + 2] * cube(F[k]) * y4 - F[k - 1] * cube(F[k + 1]));
            else
                F.push_back(F[k + 2] * cube(F[k]) - F[k - 1] * cube(F[k + 1]) * y4);
        } else {
            // psi_{2k} = psi_k / (2y) * (psi_{k+2} psi_{k-1}^2 - psi_{k-2} psi_{k+1}^2).
            F.push_back(F[k] * (F[k + 2] * F[k - 1] * F[k - 1] - F[k - 2] * F[k + 1] * F[k + 1]) * half);
        }
    }
    F.resize(count, Poly(m));
    return F;
}

MultiplicationMaps multiplication_maps(const Curve& curve, std::uint64_t n)
{
    const Modulus& m = curve.field();
    if (n == 0)
        throw std::invalid_argument("multiplication map needs n >= 1");
    if (nat(n) % m.value() == 0)
        throw std::invalid_argument("multiplication map needs p not dividing n");

    const auto F = division_polynomials(curve, 2 * n + 2);
    const Poly Y = curve.rhs_poly();
    const Poly x = Poly::x(m);
    const Poly& fn = F[n];
    const Poly fn2 = fn * fn;
    const Poly neighbours = F[n - 1] * F[n + 1];

    MultiplicationMaps maps{Poly(m), Poly(m), Poly(m), Poly(m)};
    if (n % 2 == 1) {
        maps.v1 = fn2;
        maps.u1 = x * fn2 - Y * neighbours;
        maps.v2 = fn2 * fn2 * m(2);
    } else {
        maps.v1 = Y * fn2;
        maps.u1 = x * maps.v1 - neighbours;
        maps.v2 = fn2 * fn2 * Y * Y * m(2);
    }
    maps.u2 = F[2 * n];

    const Poly g1 = gcd(maps.u1, maps.v1);
    maps.u1 = exact_quotient(maps.u1, g1);
    maps.v1 = exact_quotient(maps.v1, g1);
    const Poly g2 = gcd(maps.u2, maps.v2);
    maps.u2 = exact_quotient(maps.u2, g2);
    maps.v2 = exact_quotient(maps.v2, g2);
    const Residue scale = maps.v2.leading().inverse();
    maps.u2 = maps.u2 * scale;
    maps.v2 = maps.v2 * scale;

    if (maps.u1.degree() != static_cast<long>(n * n) || maps.v1.degree() > static_cast<long>(n * n) - 1)
        throw std::logic_error("multiplication map has the wrong degree");
    if (gcd(maps.u1, maps.v1).degree() != 0 || gcd(maps.u2, maps.v2).degree() != 0)
        throw std::logic_error("multiplication map components are not coprime");
    return maps;
}

std::vector<Point> ec_nth_root(const Curve& curve, const Point& q, std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("ec_nth_root needs n >= 1");
    return ec_nth_root(curve, q, n, multiplication_maps(curve, n), complete_profile(curve.field()));
}

std::vector<Point> ec_nth_root(const Curve& curve, const Point& q, std::uint64_t n, const MultiplicationMaps& maps,
                               const FieldProfile& profile)
{
    const Modulus& m = curve.field();
    if (n == 0 || nat(n) % m.value() == 0)
        throw std::invalid_argument("ec_nth_root needs n >= 1 with p not dividing n");
    if (!on_curve(curve, q))
        throw std::invalid_argument("Q is not on the curve");
    const Natural nn = nat(n);

    std::vector<Point> out;
    auto accept = [&](Point p) {
        if (scalar_mul(curve, p, nn) == q)
            out.push_back(std::move(p));
    };

    if (q.infinity) {
        // Rational n-torsion: x-coordinates are roots of v1, y from y^2 = rhs(x).
        if (maps.v1.degree() > 0) {
            for (const Residue& alpha : roots(maps.v1, profile))
                for (const Residue& y : square_roots(profile, curve.rhs(alpha))) {
                    Point p = Point::affine(alpha.value(), y.value());
                    if (!(scalar_mul(curve, p, nn) == q))
                        throw AlgebraicContradiction("root of v1 is not an n-torsion x-coordinate");
                    out.push_back(std::move(p));
                }
        }
    } else {
        const Residue xq = m(q.x);
        const Residue yq = m(q.y);
        const Poly f = maps.u1 - maps.v1 * xq;
        for (const Residue& alpha : roots(f, profile)) {
            if (eval(maps.v1, alpha).is_zero())
                continue;
            const Residue rhs = curve.rhs(alpha);
            const Residue u2 = eval(maps.u2, alpha);
            if (!u2.is_zero()) {
                // h(y) = y*U2(alpha) - yQ*V2(alpha) is linear in y.
                const Residue y = yq * eval(maps.v2, alpha) * u2.inverse();
                if (!(y * y == rhs))
                    continue;
                Point p = Point::affine(alpha.value(), y.value());
                if (!(scalar_mul(curve, p, nn) == q))
                    throw AlgebraicContradiction("y-map solution does not satisfy n*P = Q");
                out.push_back(std::move(p));
            } else {
                for (const Residue& y : square_roots(profile, rhs))
                    accept(Point::affine(alpha.value(), y.value()));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace rroot
