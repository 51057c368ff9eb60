#include "rroot/oracle.hpp"

#include <algorithm>
#include <string>

namespace rroot::oracle {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m)
{
    u64 acc = 1 % m;
    b %= m;
    for (; e > 0; e >>= 1) {
        if (e & 1)
            acc = mulmod(acc, b, m);
        b = mulmod(b, b, m);
    }
    return acc;
}

void require_small_prime(u64 q, u64 bound)
{
    if (q > bound)
        throw BoundExceeded("oracle refuses q = " + std::to_string(q) + " above bound " + std::to_string(bound));
    if (!is_prime(q))
        throw std::invalid_argument("oracle needs a prime modulus, got " + std::to_string(q));
}

struct SmallCurve {
    u64 p;
    u64 a4;
    u64 a6;
};

struct SmallPoint {
    bool inf = true;
    u64 x = 0;
    u64 y = 0;
};

SmallCurve small(const Curve& curve, u64 bound)
{
    const u64 p = to_u64(curve.field().value());
    require_small_prime(p, bound);
    return {p, to_u64(curve.a4().value()), to_u64(curve.a6().value())};
}

u64 inv(u64 a, u64 p)
{
    return powmod(a, p - 2, p);
}

SmallPoint add(const SmallCurve& c, const SmallPoint& P, const SmallPoint& Q)
{
    if (P.inf)
        return Q;
    if (Q.inf)
        return P;
    const u64 p = c.p;
    u64 lambda;
    if (P.x == Q.x) {
        if ((P.y + Q.y) % p == 0)
            return {};
        lambda = mulmod((3 * mulmod(P.x, P.x, p) + c.a4) % p, inv(2 * P.y % p, p), p);
    } else {
        lambda = mulmod((Q.y + p - P.y) % p, inv((Q.x + p - P.x) % p, p), p);
    }
    const u64 x3 = (mulmod(lambda, lambda, p) + 2 * p - P.x - Q.x) % p;
    const u64 y3 = (mulmod(lambda, (P.x + p - x3) % p, p) + p - P.y) % p;
    return {false, x3, y3};
}

SmallPoint times(const SmallCurve& c, const SmallPoint& P, u64 n)
{
    SmallPoint acc;
    for (u64 i = 0; i < n; ++i)
        acc = add(c, acc, P);
    return acc;
}

SmallPoint to_small(const Point& P)
{
    if (P.infinity)
        return {};
    return {false, to_u64(P.x), to_u64(P.y)};
}

Point to_point(const SmallPoint& P)
{
    if (P.inf)
        return Point::at_infinity();
    return Point::affine(Natural(static_cast<unsigned long>(P.x)), Natural(static_cast<unsigned long>(P.y)));
}

std::vector<SmallPoint> points(const SmallCurve& c)
{
    std::vector<SmallPoint> out;
    for (u64 x = 0; x < c.p; ++x) {
        const u64 rhs = (mulmod(mulmod(x, x, c.p), x, c.p) + mulmod(c.a4, x, c.p) + c.a6) % c.p;
        for (u64 y = 0; y < c.p; ++y)
            if (mulmod(y, y, c.p) == rhs)
                out.push_back({false, x, y});
    }
    return out;
}

}  // namespace

u64 trial_division(u64 n)
{
    if (n < 2)
        throw std::invalid_argument("trial_division needs n >= 2");
    if (n > kTrialDivisionLimit)
        throw BoundExceeded("trial_division refuses n above 2^44");
    if (n % 2 == 0)
        return 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return d;
    return n;
}

bool is_prime(u64 n)
{
    return n >= 2 && trial_division(n) == n;
}

std::vector<u64> all_rth_roots(u64 q, u64 r, u64 beta, u64 bound)
{
    require_small_prime(q, bound);
    std::vector<u64> out;
    for (u64 x = 0; x < q; ++x)
        if (powmod(x, r, q) == beta % q)
            out.push_back(x);
    return out;
}

std::vector<u64> all_nonresidues(u64 q, u64 r, u64 bound)
{
    require_small_prime(q, bound);
    std::vector<bool> hit(q, false);
    for (u64 x = 1; x < q; ++x)
        hit[powmod(x, r, q)] = true;
    std::vector<u64> out;
    for (u64 x = 1; x < q; ++x)
        if (!hit[x])
            out.push_back(x);
    return out;
}

u64 multiplicative_order(u64 q, u64 x, u64 bound)
{
    require_small_prime(q, bound);
    x %= q;
    if (x == 0)
        throw std::invalid_argument("zero has no multiplicative order");
    u64 k = 1;
    for (u64 y = x; y != 1; y = mulmod(y, x, q))
        ++k;
    return k;
}

std::map<u64, u64> element_orders(u64 q, u64 bound)
{
    require_small_prime(q, bound);
    std::map<u64, u64> out;
    for (u64 x = 1; x < q; ++x)
        out[x] = multiplicative_order(q, x, bound);
    return out;
}

std::vector<u64> poly_roots_bruteforce(const Poly& f, u64 bound)
{
    const u64 q = to_u64(f.modulus().value());
    require_small_prime(q, bound);
    if (f.is_zero())
        throw std::domain_error("every element is a root of the zero polynomial");
    std::vector<u64> c;
    for (const auto& v : f.coefficients())
        c.push_back(to_u64(v));
    std::vector<u64> out;
    for (u64 x = 0; x < q; ++x) {
        u64 acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = (mulmod(acc, x, q) + *it) % q;
        if (acc == 0)
            out.push_back(x);
    }
    return out;
}

std::vector<Point> curve_points(const Curve& curve, u64 bound)
{
    std::vector<Point> out;
    for (const auto& P : points(small(curve, bound)))
        out.push_back(to_point(P));
    return out;
}

std::vector<Point> nth_root_preimages(const Curve& curve, const Point& q, u64 n, u64 bound)
{
    const SmallCurve c = small(curve, bound);
    const SmallPoint target = to_small(q);
    std::vector<Point> out;
    for (const auto& P : points(c)) {
        const SmallPoint R = times(c, P, n);
        if (R.inf == target.inf && (R.inf || (R.x == target.x && R.y == target.y)))
            out.push_back(to_point(P));
    }
    return out;
}

Point multiply_naive(const Curve& curve, const Point& p, u64 n, u64 bound)
{
    const SmallCurve c = small(curve, bound);
    return to_point(times(c, to_small(p), n));
}

}  // namespace rroot::oracle
