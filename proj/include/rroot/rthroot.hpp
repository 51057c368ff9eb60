#pragma once

// Deterministic r-th roots over Z/qZ without a supplied r-th nonresidue.
//
// For r^2 | q-1 the root is obtained by splitting x^r - beta in
// F_q[x]/(x^r - beta): pick a base point a, use the rational function
// psi_a(x) = (a - x)/(a - rho*x) whose values at the r roots of x^r - beta
// have orders that cannot all agree, and separate the roots by gcds with
// g_k(x, a, z) = (a - x)^k - z*(a - rho*x)^k. Any nontrivial monic factor of
// x^r - beta then yields a root directly (root_from_factor).
//
// When q is only a candidate prime, every non-invertible element or broken
// identity is reported through ZeroDivisor / OrderAnomaly /
// AlgebraicContradiction instead of being silently ignored.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rroot/modring.hpp"
#include "rroot/polyring.hpp"

namespace rroot {

inline constexpr std::uint64_t kDefaultZetaScanBound = std::uint64_t{1} << 20;

/// The profile does not carry the data an operation needs (missing prime,
/// cofactor t != 1, inconsistent factorization).
class ProfileError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// r does not divide q - 1.
class NotDivisor : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A deterministic scan hit its configured bound without an answer.
class ScanExhausted : public std::runtime_error {
public:
    explicit ScanExhausted(std::uint64_t bound);
    std::uint64_t bound() const noexcept { return bound_; }

private:
    std::uint64_t bound_;
};

/// An identity that holds over every finite field failed. Over a prime
/// modulus this is a bug; over Z/NZ it means N is composite.
class AlgebraicContradiction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Partial factorization q - 1 = r_1^e_1 ... r_m^e_m * t with gcd(r_1...r_m, t) = 1,
/// plus a shared, populate-once cache of primitive roots of unity.
class FieldProfile {
public:
    FieldProfile(Modulus q, std::vector<PrimePower> factors, Natural cofactor,
                 std::uint64_t zeta_scan_bound = kDefaultZetaScanBound);

    const Modulus& field() const noexcept { return q_; }
    const Natural& group_order() const noexcept { return q_minus_1_; }
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    const Natural& cofactor() const noexcept { return t_; }
    std::uint64_t zeta_scan_bound() const noexcept { return zeta_scan_bound_; }

    std::optional<unsigned> exponent_of(std::uint64_t r) const;
    FactoredInteger factored_order() const { return {factors_, t_}; }

    std::optional<Natural> cached_zeta(std::uint64_t n) const;
    void store_zeta(std::uint64_t n, const Natural& zeta) const;

private:
    struct ZetaCache {
        std::mutex lock;
        std::map<std::uint64_t, Natural> values;
    };

    Modulus q_;
    Natural q_minus_1_;
    std::vector<PrimePower> factors_;
    Natural t_;
    std::uint64_t zeta_scan_bound_;
    std::shared_ptr<ZetaCache> cache_;
};

/// Trial-divides q - 1 by every prime <= bound; what remains is the cofactor t.
FieldProfile factor_group_order(const Modulus& q, std::uint64_t bound);

/// Full factorization of q - 1 by trial division up to sqrt(q - 1); the
/// leftover prime (if any) joins the factor list so t = 1.
FieldProfile complete_profile(const Modulus& q);

/// Element of exact order n (n prime, or n = 4), n | q - 1. Scans a = 2, 3, ...
/// computing a^((q-1)/n); memoized in the profile.
Residue find_zeta(const FieldProfile& profile, std::uint64_t n);

/// One step of the splitting pipeline, for --trace output.
struct TraceEvent {
    unsigned depth;
    std::string stage;
    std::string value;
};
using SplitTrace = std::vector<TraceEvent>;

/// Precomputed (a - x)^k and (a - rho*x)^k modulo x^r - beta, so that
/// g_k(x, a, z) = f1 - z*f2 for any z without repeating the powering.
class PsiPair {
public:
    PsiPair(const Residue& a, const Residue& rho, const Natural& k, const Poly& modulus);

    const Poly& f1() const noexcept { return f1_; }
    const Poly& f2() const noexcept { return f2_; }
    const Residue& a() const noexcept { return a_; }
    const Natural& exponent() const noexcept { return k_; }

    /// f1 - z*f2 mod x^r - beta.
    Poly g(const Residue& z) const;
    /// f1 - z(x)*f2 mod x^r - beta.
    Poly g(const Poly& z) const;
    /// The pair for exponent k*ell, by raising f1 and f2 to the ell-th power.
    PsiPair raised(std::uint64_t ell) const;

private:
    PsiPair(Residue a, Natural k, Poly f1, Poly f2, Poly modulus);

    Residue a_;
    Natural k_;
    Poly f1_;
    Poly f2_;
    Poly modulus_;
};

/// Working state threaded through find_a -> find_ell -> find_k0 -> split.
struct SplitState {
    const FieldProfile* profile;
    std::uint64_t r;
    Residue beta;
    Residue rho;
    Residue a;
    std::uint64_t ell = 0;
    unsigned e_prime = 0;
    unsigned k0 = 0;
    Natural d = 0;
    std::vector<Poly> D;
    unsigned depth = 1;
};

/// With n = deg f, c0 = f(0), u*n + v*r = 1,
/// returns (-1)^(n*u) * c0^u * beta^v and checks its r-th power.
Residue root_from_factor(std::uint64_t r, const Residue& beta, const Poly& f);

/// Scans a = 1, 2, ..., k+1: returns x - a if a^r = beta, a nontrivial
/// gcd(g_{a,k}, x^r - beta) if one appears, else the first a with gcd 1.
std::variant<Residue, Poly> find_a(const FieldProfile& profile, std::uint64_t r, const Residue& beta,
                                   const Residue& rho, const Natural& k);

/// Picks ell among the profile primes (r first) with gcd(g_{a,h_j}, x^r - beta) = 1.
std::variant<std::uint64_t, Poly> find_ell(const SplitState& state);

/// Fills state.e_prime and state.D; returns k0, or a strict factor found in D.
std::variant<unsigned, Poly> find_k0(SplitState& state);

/// Splits x^r - beta given a, ell, k0 (cases V.1, V.2, V.3). Sets state.d.
Poly split(SplitState& state, SplitTrace* trace = nullptr);

/// Monic f with 0 < deg f < r and f | x^r - beta. Requires r^2 | q-1 and
/// beta a nonzero r-th residue.
Poly find_factor(const FieldProfile& profile, std::uint64_t r, const Residue& beta,
                 SplitTrace* trace = nullptr, unsigned depth = 1);

/// x with x^r = beta, or nullopt when beta is not an r-th residue.
std::optional<Residue> rth_root(const FieldProfile& profile, std::uint64_t r, const Residue& beta,
                                SplitTrace* trace = nullptr);

/// An element of exact order r^e (e the exponent of r in q - 1), hence an r-th nonresidue.
Residue nonresidue(const FieldProfile& profile, std::uint64_t r);

/// Generator of (Z/qZ)^*; requires cofactor t = 1.
Residue primitive_element(const FieldProfile& profile);

}  // namespace rroot
