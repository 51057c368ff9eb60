#include "rroot/rthroot.hpp"

#include <algorithm>
#include <numeric>

namespace rroot {

namespace {

Natural nat(std::uint64_t v)
{
    return Natural(static_cast<unsigned long>(v));
}

bool is_prime_param(std::uint64_t r)
{
    return mpz_probab_prime_p(nat(r).get_mpz_t(), 30) > 0;
}

void trace_event(SplitTrace* trace, unsigned depth, std::string stage, std::string value)
{
    if (trace != nullptr)
        trace->push_back({depth, std::move(stage), std::move(value)});
}

enum class GcdKind { one, strict, full };

GcdKind classify(const Poly& g, std::uint64_t r)
{
    if (g.degree() == 0)
        return GcdKind::one;
    if (g.degree() == static_cast<long>(r))
        return GcdKind::full;
    return GcdKind::strict;
}

Poly checked_factor(Poly f, std::uint64_t r, const Residue& beta)
{
    const Poly binomial = Poly::binomial(r, beta);
    if (!f.is_monic() || f.degree() <= 0 || f.degree() >= static_cast<long>(r)
        || !rem(binomial, f).is_zero())
        throw AlgebraicContradiction("factor " + to_string(f) + " does not strictly divide "
                                     + to_string(binomial));
    return f;
}

Residue signed_power(const Residue& base, const Natural& exponent)
{
    if (sgn(exponent) >= 0)
        return base.pow(exponent);
    return base.inverse().pow(-exponent);
}

std::string degrees(const std::vector<Poly>& polys)
{
    std::string out;
    for (const auto& p : polys) {
        if (!out.empty())
            out += ',';
        out += std::to_string(p.degree());
    }
    return out;
}

}  // namespace

ScanExhausted::ScanExhausted(std::uint64_t bound)
    : std::runtime_error("deterministic scan exhausted at bound " + std::to_string(bound)), bound_(bound)
{
}

// ---------------------------------------------------------------------------
// FieldProfile

FieldProfile::FieldProfile(Modulus q, std::vector<PrimePower> factors, Natural cofactor,
                           std::uint64_t zeta_scan_bound)
    : q_(std::move(q)),
      q_minus_1_(q_.value() - 1),
      factors_(std::move(factors)),
      t_(std::move(cofactor)),
      zeta_scan_bound_(zeta_scan_bound),
      cache_(std::make_shared<ZetaCache>())
{
    if (t_ < 1)
        throw ProfileError("cofactor must be positive");
    std::sort(factors_.begin(), factors_.end(),
              [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
    Natural product = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& pp = factors_[i];
        if (pp.exponent == 0 || !is_prime_param(pp.prime))
            throw ProfileError("profile entries must be primes with exponent >= 1");
        if (i > 0 && factors_[i - 1].prime == pp.prime)
            throw ProfileError("duplicate prime in profile");
        if (mpz_divisible_ui_p(t_.get_mpz_t(), pp.prime))
            throw ProfileError("cofactor shares the prime " + std::to_string(pp.prime));
        product *= ipow(pp.prime, pp.exponent);
    }
    if (product * t_ != q_minus_1_)
        throw ProfileError("profile does not multiply out to q - 1");
}

std::optional<unsigned> FieldProfile::exponent_of(std::uint64_t r) const
{
    for (const auto& pp : factors_)
        if (pp.prime == r)
            return pp.exponent;
    return std::nullopt;
}

std::optional<Natural> FieldProfile::cached_zeta(std::uint64_t n) const
{
    std::lock_guard guard(cache_->lock);
    auto it = cache_->values.find(n);
    if (it == cache_->values.end())
        return std::nullopt;
    return it->second;
}

void FieldProfile::store_zeta(std::uint64_t n, const Natural& zeta) const
{
    std::lock_guard guard(cache_->lock);
    cache_->values.emplace(n, zeta);
}

FieldProfile factor_group_order(const Modulus& q, std::uint64_t bound)
{
    if (q.value() < 3)
        throw std::invalid_argument("factor_group_order needs q >= 3");
    Natural rest = q.value() - 1;
    std::vector<PrimePower> factors;
    for (std::uint64_t p = 2; p <= bound && rest > 1; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0)
            factors.push_back({p, e});
    }
    return FieldProfile(q, std::move(factors), std::move(rest));
}

FieldProfile complete_profile(const Modulus& q)
{
    if (q.value() == 2)
        return FieldProfile(q, {}, 1);
    Natural rest = q.value() - 1;
    std::vector<PrimePower> factors;
    for (std::uint64_t p = 2; nat(p) * nat(p) <= rest; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0)
            factors.push_back({p, e});
    }
    if (rest > 1) {
        const std::uint64_t p = to_u64(rest);
        auto it = std::find_if(factors.begin(), factors.end(), [&](const PrimePower& pp) { return pp.prime == p; });
        if (it != factors.end())
            ++it->exponent;
        else
            factors.push_back({p, 1});
    }
    return FieldProfile(q, std::move(factors), 1);
}

// ---------------------------------------------------------------------------
// Roots of unity

Residue find_zeta(const FieldProfile& profile, std::uint64_t n)
{
    const Modulus& q = profile.field();
    if (n != 4 && !is_prime_param(n))
        throw std::invalid_argument("find_zeta supports prime orders and 4, got " + std::to_string(n));
    if (!mpz_divisible_ui_p(profile.group_order().get_mpz_t(), n))
        throw NotDivisor(std::to_string(n) + " does not divide q - 1");
    if (auto cached = profile.cached_zeta(n))
        return q(*cached);

    const Natural exponent = profile.group_order() / nat(n);
    const Residue minus_one = -q.one();
    Natural g;
    Natural limit = profile.group_order();
    if (nat(profile.zeta_scan_bound()) < limit)
        limit = nat(profile.zeta_scan_bound());
    for (Natural a_value = 2; a_value <= limit; ++a_value) {
        mpz_gcd(g.get_mpz_t(), a_value.get_mpz_t(), q.value().get_mpz_t());
        if (g != 1)
            throw ZeroDivisor(g);
        const Residue a = q(a_value);
        const Residue c = a.pow(exponent);
        if (n == 4) {
            const Residue s = c * c;
            if (s.is_one())
                continue;
            if (s == minus_one) {
                profile.store_zeta(n, c.value());
                return c;
            }
            if (!(s * s).is_one())
                throw OrderAnomaly(a.value());
            const Natural s_minus_1 = (s - q.one()).value();
            mpz_gcd(g.get_mpz_t(), s_minus_1.get_mpz_t(), q.value().get_mpz_t());
            throw ZeroDivisor(g);
        }
        if (c.is_one())
            continue;
        if (!c.pow(nat(n)).is_one())
            throw OrderAnomaly(a.value());
        profile.store_zeta(n, c.value());
        return c;
    }
    throw ScanExhausted(profile.zeta_scan_bound());
}

// ---------------------------------------------------------------------------
// PsiPair

PsiPair::PsiPair(const Residue& a, const Residue& rho, const Natural& k, const Poly& modulus)
    : a_(a),
      k_(k),
      f1_(powmod(Poly(a.modulus(), {a.value(), (-a.modulus().one()).value()}), k, modulus)),
      f2_(powmod(Poly(a.modulus(), {a.value(), (-rho).value()}), k, modulus)),
      modulus_(modulus)
{
}

PsiPair::PsiPair(Residue a, Natural k, Poly f1, Poly f2, Poly modulus)
    : a_(std::move(a)), k_(std::move(k)), f1_(std::move(f1)), f2_(std::move(f2)), modulus_(std::move(modulus))
{
}

Poly PsiPair::g(const Residue& z) const
{
    return f1_ - f2_ * z;
}

Poly PsiPair::g(const Poly& z) const
{
    return f1_ - mulmod(z, f2_, modulus_);
}

PsiPair PsiPair::raised(std::uint64_t ell) const
{
    const Natural e = nat(ell);
    return PsiPair(a_, k_ * e, powmod(f1_, e, modulus_), powmod(f2_, e, modulus_), modulus_);
}

// ---------------------------------------------------------------------------
// Algorithm steps

Residue root_from_factor(std::uint64_t r, const Residue& beta, const Poly& f)
{
    if (!f.is_monic() || f.degree() <= 0 || f.degree() >= static_cast<long>(r))
        throw std::invalid_argument("root_from_factor needs a monic factor of degree in (0, r)");
    const auto n = static_cast<unsigned long>(f.degree());
    const Residue c0 = f.coeff(0);
    if (c0.is_zero())
        throw AlgebraicContradiction("factor of x^r - beta with zero constant term");
    const Bezout b = extended_gcd(Natural(n), nat(r));
    if (b.g != 1)
        throw std::invalid_argument("degree of factor shares a factor with r");
    Residue x = signed_power(c0, b.u) * signed_power(beta, b.v);
    if (mpz_odd_p(Natural(b.u * n).get_mpz_t()))
        x = -x;
    if (!(x.pow(nat(r)) == beta))
        throw AlgebraicContradiction("root from factor " + to_string(f) + " fails x^r = beta");
    return x;
}

std::variant<Residue, Poly> find_a(const FieldProfile& profile, std::uint64_t r, const Residue& beta,
                                   const Residue& rho, const Natural& k)
{
    if (k <= 1)
        throw std::invalid_argument("find_a needs k > 1");
    const Modulus& q = profile.field();
    const Poly binomial = Poly::binomial(r, beta);
    const Natural rr = nat(r);
    const Residue one = q.one();
    for (Natural i = 1; i <= k + 1; ++i) {
        const Residue a = q(i);
        if (a.pow(rr) == beta)
            return Poly::linear(a);
        const PsiPair psi(a, rho, k, binomial);
        Poly g = gcd(psi.g(one), binomial);
        switch (classify(g, r)) {
        case GcdKind::one:
            return a;
        case GcdKind::strict:
            return checked_factor(std::move(g), r, beta);
        case GcdKind::full:
            break;
        }
    }
    throw AlgebraicContradiction("find_a: all k+1 candidates give g_{a,k} = 0 mod x^r - beta");
}

std::variant<std::uint64_t, Poly> find_ell(const SplitState& state)
{
    const FieldProfile& profile = *state.profile;
    const Poly binomial = Poly::binomial(state.r, state.beta);
    const Residue one = profile.field().one();

    std::vector<PrimePower> order;
    for (const auto& pp : profile.factors())
        if (pp.prime == state.r)
            order.insert(order.begin(), pp);
        else
            order.push_back(pp);

    std::optional<std::uint64_t> first_one;
    for (const auto& pp : order) {
        const unsigned strip = pp.prime == state.r ? pp.exponent - 1 : pp.exponent;
        const Natural h = profile.group_order() / ipow(pp.prime, strip);
        const PsiPair psi(state.a, state.rho, h, binomial);
        Poly g = gcd(psi.g(one), binomial);
        const GcdKind kind = classify(g, state.r);
        if (kind == GcdKind::strict)
            return checked_factor(std::move(g), state.r, state.beta);
        if (kind == GcdKind::one && !first_one)
            first_one = pp.prime;
    }
    if (!first_one)
        throw AlgebraicContradiction("find_ell: every h_j gives g_{a,h_j} = 0 mod x^r - beta");
    return *first_one;
}

std::variant<unsigned, Poly> find_k0(SplitState& state)
{
    const FieldProfile& profile = *state.profile;
    const Poly binomial = Poly::binomial(state.r, state.beta);
    const Residue one = profile.field().one();
    const unsigned e_ell = profile.exponent_of(state.ell).value();
    state.e_prime = state.ell == state.r ? e_ell - 1 : e_ell;

    // D_i = gcd(g_{a,(q-1)/ell^i}, x^r - beta); start at i = e' and raise by ell.
    state.D.assign(state.e_prime + 1, Poly(profile.field()));
    PsiPair psi(state.a, state.rho, profile.group_order() / ipow(state.ell, state.e_prime), binomial);
    for (unsigned i = state.e_prime + 1; i-- > 0;) {
        state.D[i] = gcd(psi.g(one), binomial);
        if (i > 0)
            psi = psi.raised(state.ell);
    }

    if (classify(state.D.front(), state.r) != GcdKind::full)
        throw AlgebraicContradiction("find_k0: D_0 differs from x^r - beta");
    if (classify(state.D.back(), state.r) != GcdKind::one)
        throw AlgebraicContradiction("find_k0: D_e' differs from 1");
    for (unsigned i = 1; i < state.e_prime; ++i)
        if (classify(state.D[i], state.r) == GcdKind::strict)
            return checked_factor(state.D[i], state.r, state.beta);

    unsigned k0 = 0;
    for (unsigned i = 0; i <= state.e_prime; ++i)
        if (classify(state.D[i], state.r) == GcdKind::full)
            k0 = i;
    for (unsigned i = 0; i <= k0; ++i)
        if (classify(state.D[i], state.r) != GcdKind::full)
            throw AlgebraicContradiction("find_k0: D sequence is not monotone");
    state.k0 = k0;
    return k0;
}

Poly split(SplitState& state, SplitTrace* trace)
{
    const FieldProfile& profile = *state.profile;
    const Modulus& q = profile.field();
    const Poly binomial = Poly::binomial(state.r, state.beta);
    const std::uint64_t r = state.r;

    if (state.ell == r)
        state.d = profile.group_order() / ipow(r, state.k0 + 2);
    else
        state.d = profile.group_order() / ipow(state.ell, state.k0 + 1);
    trace_event(trace, state.depth, "d", to_string(state.d));
    const PsiPair psi(state.a, state.rho, state.d, binomial);

    auto try_gcd = [&](const Poly& g) -> std::optional<Poly> {
        Poly f = gcd(g, binomial);
        if (classify(f, r) == GcdKind::strict)
            return checked_factor(std::move(f), r, state.beta);
        return std::nullopt;
    };

    if (state.ell != r) {
        trace_event(trace, state.depth, "case", "V.1");
        const Residue zeta = find_zeta(profile, state.ell);
        Residue z = zeta;
        for (std::uint64_t n = 1; n < state.ell; ++n, z *= zeta)
            if (auto f = try_gcd(psi.g(z)))
                return *f;
        throw AlgebraicContradiction("split V.1: no exponent separates the roots");
    }

    const std::uint64_t r2 = r * r;
    if (!state.beta.pow(nat(r)).is_one()) {
        trace_event(trace, state.depth, "case", "V.2");
        // zeta_{r^2} as an r-th root of rho, computed by the same machinery.
        const Poly inner = find_factor(profile, r, state.rho, trace, state.depth + 1);
        const Residue zeta = root_from_factor(r, state.rho, inner);
        trace_event(trace, state.depth, "zeta_r2", to_string(zeta.value()));
        Residue z = zeta;
        for (std::uint64_t n = 1; n < r2; ++n, z *= zeta) {
            if (n % r == 0)
                continue;
            if (auto f = try_gcd(psi.g(z)))
                return *f;
        }
        throw AlgebraicContradiction("split V.2: no exponent separates the roots");
    }

    if (r == 2 || state.beta.is_one())
        throw std::logic_error("split V.3 requires r odd and beta a primitive r-th root of unity");
    trace_event(trace, state.depth, "case", "V.3");
    // zeta_{r^2} replaced by the indeterminate x itself.
    const Poly xpoly = Poly::x(q);
    Poly xn = rem(xpoly, binomial);
    for (std::uint64_t n = 1; n < r2; ++n, xn = mulmod(xn, xpoly, binomial)) {
        if (n % r == 0)
            continue;
        if (auto f = try_gcd(psi.g(xn)))
            return *f;
    }
    throw AlgebraicContradiction("split V.3: no exponent separates the roots");
}

Poly find_factor(const FieldProfile& profile, std::uint64_t r, const Residue& beta, SplitTrace* trace,
                 unsigned depth)
{
    if (depth > 2)
        throw std::logic_error("find_factor recursion deeper than 2");
    const Modulus& q = profile.field();
    if (beta.is_zero())
        throw std::domain_error("find_factor needs beta != 0");
    const auto e1 = profile.exponent_of(r);
    if (!e1 || *e1 < 2)
        throw ProfileError("find_factor needs r^2 | q - 1 recorded in the profile");

    if (r == 2 && beta.is_one()) {
        trace_event(trace, depth, "case", "I");
        Poly f = Poly(q, {Natural(1), Natural(1)});
        trace_event(trace, depth, "factor", to_string(f));
        return f;
    }
    if (r == 2 && beta == -q.one()) {
        trace_event(trace, depth, "case", "I");
        const Residue zeta4 = find_zeta(profile, 4);
        Poly f = checked_factor(Poly(q, {zeta4.value(), Natural(1)}), r, beta);
        trace_event(trace, depth, "factor", to_string(f));
        return f;
    }

    SplitState state{&profile, r, beta, find_zeta(profile, r), q.zero(), 0, 0, 0, 0, {}, depth};
    trace_event(trace, depth, "beta", to_string(beta.value()));
    trace_event(trace, depth, "rho", to_string(state.rho.value()));

    auto found = [&](Poly f) {
        trace_event(trace, depth, "factor", to_string(f));
        return f;
    };

    auto a = find_a(profile, r, beta, state.rho, nat(r) * profile.cofactor());
    if (auto* f = std::get_if<Poly>(&a))
        return found(std::move(*f));
    state.a = std::get<Residue>(a);
    trace_event(trace, depth, "a", to_string(state.a.value()));

    auto ell = find_ell(state);
    if (auto* f = std::get_if<Poly>(&ell))
        return found(std::move(*f));
    state.ell = std::get<std::uint64_t>(ell);
    trace_event(trace, depth, "ell", std::to_string(state.ell));

    auto k0 = find_k0(state);
    trace_event(trace, depth, "D_degrees", degrees(state.D));
    if (auto* f = std::get_if<Poly>(&k0))
        return found(std::move(*f));
    trace_event(trace, depth, "k0", std::to_string(state.k0));

    return found(split(state, trace));
}

// ---------------------------------------------------------------------------
// Top-level operations

std::optional<Residue> rth_root(const FieldProfile& profile, std::uint64_t r, const Residue& beta,
                                SplitTrace* trace)
{
    if (!(beta.modulus() == profile.field()))
        throw std::logic_error("beta lives in a different ring than the profile");
    if (beta.is_zero())
        throw std::domain_error("rth_root needs beta != 0");
    if (!is_prime_param(r))
        throw std::invalid_argument("r must be prime, got " + std::to_string(r));

    const Natural& q1 = profile.group_order();
    const Natural rr = nat(r);

    if (!mpz_divisible_ui_p(q1.get_mpz_t(), r)) {
        // gcd(r, q-1) = 1: the r-th power map is a bijection.
        Natural w;
        if (q1 == 1)
            w = 0;
        else
            mpz_invert(w.get_mpz_t(), rr.get_mpz_t(), q1.get_mpz_t());
        Residue x = beta.pow(w);
        if (!(x.pow(rr) == beta))
            throw AlgebraicContradiction("r-th power map is not inverted by r^-1 mod q-1");
        trace_event(trace, 0, "case", "coprime");
        trace_event(trace, 0, "root", to_string(x.value()));
        return x;
    }

    const Natural s = q1 / rr;
    if (!beta.pow(s).is_one())
        return std::nullopt;

    if (!mpz_divisible_ui_p(s.get_mpz_t(), r)) {
        // r exactly divides q-1: w = r^-1 mod s gives (beta^w)^r = beta^(1 + j*s) = beta.
        Natural w;
        if (s == 1)
            w = 0;
        else
            mpz_invert(w.get_mpz_t(), rr.get_mpz_t(), s.get_mpz_t());
        Residue x = beta.pow(w);
        if (!(x.pow(rr) == beta))
            return std::nullopt;
        trace_event(trace, 0, "case", "exact");
        trace_event(trace, 0, "root", to_string(x.value()));
        return x;
    }

    const Poly f = find_factor(profile, r, beta, trace, 1);
    Residue x = root_from_factor(r, beta, f);
    trace_event(trace, 0, "root", to_string(x.value()));
    return x;
}

Residue nonresidue(const FieldProfile& profile, std::uint64_t r)
{
    if (!mpz_divisible_ui_p(profile.group_order().get_mpz_t(), r))
        throw NotDivisor(std::to_string(r) + " does not divide q - 1");
    const auto e = profile.exponent_of(r);
    if (!e)
        throw ProfileError("prime " + std::to_string(r) + " is not in the profile");

    Residue z = find_zeta(profile, r);
    for (unsigned i = 1; i < *e; ++i) {
        auto next = rth_root(profile, r, z);
        if (!next)
            throw AlgebraicContradiction("root of unity of order r^i < r^e is not an r-th residue");
        z = *next;
    }
    const Natural rr = nat(r);
    const Natural top = ipow(r, *e);
    if (!z.pow(top).is_one() || z.pow(top / rr).is_one())
        throw AlgebraicContradiction("constructed element does not have order r^e");
    if (z.pow(profile.group_order() / rr).is_one())
        throw AlgebraicContradiction("element of order r^e is an r-th residue");
    return z;
}

Residue primitive_element(const FieldProfile& profile)
{
    if (profile.cofactor() != 1)
        throw ProfileError("primitive_element needs a complete factorization (t = 1)");
    Residue g = profile.field().one();
    for (const auto& pp : profile.factors())
        g *= nonresidue(profile, pp.prime);
    for (const auto& pp : profile.factors())
        if (g.pow(profile.group_order() / nat(pp.prime)).is_one())
            throw AlgebraicContradiction("product of nonresidues is not a generator");
    return g;
}

}  // namespace rroot
