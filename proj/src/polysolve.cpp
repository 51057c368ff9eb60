#include "rroot/polysolve.hpp"

#include <algorithm>

namespace rroot {

namespace {

Natural nat(std::uint64_t v)
{
    return Natural(static_cast<unsigned long>(v));
}

/// g(x) with g(x)^p = f(x) over F_p, for f' = 0 (only exponents divisible by p).
Poly pth_root(const Poly& f)
{
    const std::uint64_t p = to_u64(f.modulus().value());
    const auto& c = f.coefficients();
    std::vector<Natural> out;
    for (std::size_t i = 0; i < c.size(); i += p)
        out.push_back(c[i]);
    return Poly(f.modulus(), std::move(out));
}

Poly exact_quotient(const Poly& f, const Poly& g)
{
    auto [q, r] = divrem(f, g);
    if (!r.is_zero())
        throw std::logic_error("inexact polynomial division");
    return q;
}

}  // namespace

Poly squarefree_part(const Poly& f)
{
    if (f.is_zero())
        throw std::domain_error("squarefree part of the zero polynomial");
    const Poly one = Poly::constant(f.modulus().one());
    if (f.degree() == 0)
        return one;
    const Poly m = monic(f);
    const Poly dm = derivative(m);
    if (dm.is_zero())
        return squarefree_part(pth_root(m));

    const Poly g = gcd(m, dm);
    const Poly h = exact_quotient(m, g);
    // What survives in g after removing every factor of h has multiplicity
    // divisible by p in f, hence is a p-th power.
    Poly u = g;
    for (Poly c = gcd(u, h); c.degree() > 0; c = gcd(u, h))
        u = exact_quotient(u, c);
    if (u.degree() <= 0)
        return h;
    return monic(h * squarefree_part(pth_root(u)));
}

Poly linear_part(const Poly& f)
{
    if (f.is_zero())
        throw std::domain_error("linear part of the zero polynomial");
    const Poly m = monic(f);
    if (m.degree() == 0)
        return m;
    const Poly x = Poly::x(m.modulus());
    const Poly h = powmod(x, m.modulus().value(), m) - x;
    return gcd(m, h);
}

Poly split_linear_product(const Poly& f, const FieldProfile& profile)
{
    const Modulus& q = profile.field();
    if (!(f.modulus() == q))
        throw std::logic_error("polynomial and profile over different fields");
    if (profile.cofactor() != 1)
        throw ProfileError("split_linear_product needs the complete factorization of q - 1");
    if (!f.is_monic() || f.degree() < 2 || f.coeff(0).is_zero())
        throw std::invalid_argument("split_linear_product needs monic f with deg >= 2 and f(0) != 0");

    const Poly x = Poly::x(q);
    Residue a = q.one();
    Natural d = profile.group_order();
    for (const auto& pp : profile.factors()) {
        const Residue zeta = find_zeta(profile, pp.prime);
        const Natural rj = nat(pp.prime);
        for (unsigned k = 1; k <= pp.exponent; ++k) {
            const Poly h = powmod(x, d / rj, f);
            // Loop invariant: f | x^d - a.
            if (!(powmod(h, rj, f) == rem(Poly::constant(a), f)))
                throw InputNotLinearProduct("f does not divide x^d - a; input is not a product of distinct linear factors");
            const auto b = rth_root(profile, pp.prime, a);
            if (!b)
                throw InputNotLinearProduct("descent lost r-th residuosity; input is not a product of linear factors");

            std::optional<Residue> next;
            Residue shift = *b;
            for (std::uint64_t i = 0; i < pp.prime; ++i, shift *= zeta) {
                const Poly g = gcd(f, h - Poly::constant(shift));
                if (g.degree() > 0 && g.degree() < f.degree())
                    return g;
                if (g.degree() == f.degree()) {
                    if (next)
                        throw std::logic_error("two cosets both contain every root of f");
                    next = shift;
                }
            }
            if (!next)
                throw InputNotLinearProduct("no coset x^(d/r) = zeta^i b contains the roots of f");
            a = *next;
            d /= rj;
        }
    }
    throw InputNotLinearProduct("descent reached d = 1 without splitting f");
}

std::vector<Residue> roots(const Poly& f, const FieldProfile& profile)
{
    const Modulus& q = profile.field();
    if (!(f.modulus() == q))
        throw std::logic_error("polynomial and profile over different fields");
    if (f.is_zero())
        throw std::domain_error("every element is a root of the zero polynomial");
    if (profile.cofactor() != 1)
        throw ProfileError("roots needs the complete factorization of q - 1");

    std::vector<Residue> out;
    // Strip x^k: root 0 is recorded directly since the descent needs f(0) != 0.
    std::vector<Natural> c = monic(f).coefficients();
    std::size_t zeros = 0;
    while (zeros < c.size() && sgn(c[zeros]) == 0)
        ++zeros;
    if (zeros > 0) {
        out.push_back(q.zero());
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
    }
    const Poly stripped(q, std::move(c));

    std::vector<Poly> work;
    work.push_back(linear_part(squarefree_part(stripped)));
    while (!work.empty()) {
        Poly g = std::move(work.back());
        work.pop_back();
        if (g.degree() <= 0)
            continue;
        if (g.degree() == 1) {
            out.push_back(-g.coeff(0));
            continue;
        }
        Poly part = split_linear_product(g, profile);
        Poly rest = exact_quotient(g, part);
        // Stack order: the smaller piece is processed first.
        if (part.degree() > rest.degree())
            std::swap(part, rest);
        work.push_back(std::move(rest));
        work.push_back(std::move(part));
    }
    std::sort(out.begin(), out.end(), [](const Residue& x, const Residue& y) { return x.value() < y.value(); });
    return out;
}

}  // namespace rroot
