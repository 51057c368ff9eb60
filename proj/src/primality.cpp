#include "rroot/primality.hpp"

#include "rroot/rthroot.hpp"

namespace rroot {

namespace {

constexpr std::uint64_t kDecomposeTrialLimit = 1000000;

Natural nat(std::uint64_t v)
{
    return Natural(static_cast<unsigned long>(v));
}

}  // namespace

std::string to_string(WitnessKind kind)
{
    switch (kind) {
    case WitnessKind::fermat_failure:
        return "FermatFailure";
    case WitnessKind::zero_divisor:
        return "ZeroDivisor";
    case WitnessKind::order_anomaly:
        return "OrderAnomaly";
    case WitnessKind::gcd_factor:
        return "GcdFactor";
    }
    return "unknown";
}

ProthForm make_proth_form(const Natural& n, std::uint64_t r, unsigned e, const Natural& t)
{
    if (e < 1 || t < 1)
        throw NotProth("Proth form needs e >= 1 and t >= 1");
    if (mpz_probab_prime_p(nat(r).get_mpz_t(), 30) == 0)
        throw NotProth("Proth form needs a prime r, got " + std::to_string(r));
    if (mpz_divisible_ui_p(t.get_mpz_t(), r))
        throw NotProth("Proth form needs gcd(r, t) = 1");
    const Natural re = ipow(r, e);
    if (re <= t)
        throw NotProth("Proth form needs r^e > t");
    if (re * t + 1 != n)
        throw NotProth("r^e * t + 1 does not equal n");
    return {n, r, e, t};
}

std::optional<ProthForm> decompose(const Natural& n)
{
    if (n < 3)
        throw std::invalid_argument("decompose needs n >= 3");
    const Natural m = n - 1;
    Natural rest = m;

    auto qualifies = [&](std::uint64_t p, unsigned e) -> std::optional<ProthForm> {
        const Natural pe = ipow(p, e);
        const Natural t = m / pe;
        if (pe > t)
            return ProthForm{n, p, e, t};
        return std::nullopt;
    };

    std::uint64_t p = 2;
    for (; p <= kDecomposeTrialLimit && nat(p) * nat(p) <= rest; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0)
            if (auto form = qualifies(p, e))
                return form;
    }
    // Loop ended because p^2 > rest: rest is 1 or a prime exceeding every trial divisor.
    if (rest > 1 && nat(p) * nat(p) > rest && mpz_sizeinbase(rest.get_mpz_t(), 2) <= 64) {
        const std::uint64_t last = to_u64(rest);
        if (auto form = qualifies(last, 1))
            return form;
    }
    return std::nullopt;
}

std::optional<PrimalityVerdict> proth_check(const ProthForm& form, const Natural& a)
{
    const Natural& n = form.n;
    if (a < 2 || a >= n)
        throw std::invalid_argument("proth_check needs 2 <= a < N");
    Natural g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    if (g != 1)
        return Composite{WitnessKind::gcd_factor, g};
    const Modulus mod(n);
    const Residue base = mod(a);
    const Natural m = n - 1;
    if (!base.pow(m).is_one())
        return Composite{WitnessKind::fermat_failure, a};
    if (!base.pow(m / nat(form.r)).is_one())
        return Prime{a};
    return std::nullopt;
}

PrimalityVerdict is_prime(const Natural& n, const std::optional<ProthForm>& form_in, const IsPrimeOptions& options)
{
    if (n < 3)
        throw std::invalid_argument("is_prime needs n >= 3");
    ProthForm form;
    if (form_in) {
        form = make_proth_form(n, form_in->r, form_in->e, form_in->t);
    } else {
        auto found = decompose(n);
        if (!found)
            throw NotProth(to_string(n) + " is not a generalized Proth number");
        form = *found;
    }

    // Phase 1: any single good base is a full certificate.
    Natural limit = n - 2;
    if (options.scan_bound < limit)
        limit = options.scan_bound;
    for (Natural a = 2; a <= limit; ++a) {
        if (options.on_base)
            options.on_base(a);
        if (auto verdict = proth_check(form, a))
            return *verdict;
    }

    // Phase 2: build zeta_{r^e} over Z/NZ. For prime N it exists and passes the
    // certificate; for composite N some step must break.
    try {
        const FieldProfile profile(Modulus(n), {{form.r, form.e}}, form.t, options.zeta_scan_bound);
        Residue z = find_zeta(profile, form.r);
        for (unsigned i = 1; i < form.e; ++i) {
            auto next = rth_root(profile, form.r, z);
            if (!next)
                return Inconclusive{options.scan_bound};
            z = *next;
        }
        if (auto verdict = proth_check(form, z.value()))
            return *verdict;
    } catch (const ZeroDivisor& zd) {
        return Composite{WitnessKind::zero_divisor, zd.divisor()};
    } catch (const OrderAnomaly& oa) {
        return Composite{WitnessKind::order_anomaly, oa.element()};
    } catch (const ScanExhausted&) {
    } catch (const AlgebraicContradiction&) {
    }
    return Inconclusive{options.scan_bound};
}

bool verify_witness(const ProthForm& form, const PrimalityVerdict& verdict)
{
    const Natural& n = form.n;
    if (ipow(form.r, form.e) <= form.t || ipow(form.r, form.e) * form.t + 1 != n)
        return false;
    const Modulus mod(n);
    const Natural m = n - 1;
    if (const auto* p = std::get_if<Prime>(&verdict)) {
        const Residue a = mod(p->witness_a);
        return a.pow(m).is_one() && !a.pow(m / nat(form.r)).is_one();
    }
    if (const auto* c = std::get_if<Composite>(&verdict)) {
        switch (c->kind) {
        case WitnessKind::gcd_factor:
        case WitnessKind::zero_divisor:
            return c->witness > 1 && c->witness < n && mpz_divisible_p(n.get_mpz_t(), c->witness.get_mpz_t());
        case WitnessKind::fermat_failure:
        case WitnessKind::order_anomaly: {
            const Residue x = mod(c->witness);
            return !x.is_zero() && !x.pow(m).is_one();
        }
        }
    }
    return false;
}

}  // namespace rroot
