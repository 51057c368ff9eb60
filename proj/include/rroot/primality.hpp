#pragma once

// Deterministic primality for generalized Proth numbers N = r^e * t + 1 with
// r prime, gcd(r, t) = 1 and r^e > t. A base a with a^(N-1) = 1 and
// a^((N-1)/r) != 1 certifies primality; when no small base does, the r-th
// root machinery runs over Z/NZ and builds an element of order r^e, and any
// algebraic failure along the way certifies compositeness.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "rroot/modring.hpp"

namespace rroot {

inline const Natural kDefaultPrimalityScanBound = 1000000;

class NotProth : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ProthForm {
    Natural n;
    std::uint64_t r;
    unsigned e;
    Natural t;
};

/// Validates n = r^e*t + 1, r prime, e >= 1, t >= 1, gcd(r, t) = 1, r^e > t.
ProthForm make_proth_form(const Natural& n, std::uint64_t r, unsigned e, const Natural& t);

/// Smallest prime r whose full power in n - 1 exceeds the cofactor. Trial
/// division runs over primes up to min(sqrt(n - 1), 10^6); the leftover prime
/// of a complete factorization is also considered. nullopt when none qualifies.
std::optional<ProthForm> decompose(const Natural& n);

enum class WitnessKind { fermat_failure, zero_divisor, order_anomaly, gcd_factor };

std::string to_string(WitnessKind kind);

struct Prime {
    Natural witness_a;
};
struct Composite {
    WitnessKind kind;
    Natural witness;
};
struct Inconclusive {
    Natural scan_bound;
};
using PrimalityVerdict = std::variant<Prime, Composite, Inconclusive>;

/// One base: GcdFactor, FermatFailure, Prime(a), or nullopt when a^((N-1)/r) = 1.
std::optional<PrimalityVerdict> proth_check(const ProthForm& form, const Natural& a);

struct IsPrimeOptions {
    Natural scan_bound = kDefaultPrimalityScanBound;
    std::uint64_t zeta_scan_bound = std::uint64_t{1} << 20;
    /// Called with each scanned base in phase 1 (may be empty).
    std::function<void(const Natural&)> on_base;
};

/// Phase 1 scans a = 2..min(scan_bound, N-2); phase 2 builds zeta_{r^e} over
/// Z/NZ by repeated r-th roots; otherwise Inconclusive. Without a form the
/// number is decomposed first (NotProth if impossible).
PrimalityVerdict is_prime(const Natural& n, const std::optional<ProthForm>& form = std::nullopt,
                          const IsPrimeOptions& options = {});

/// Re-checks a verdict's witness from scratch: a Prime base satisfies both
/// certificate congruences; a Composite witness either divides N properly or
/// fails Fermat's congruence.
bool verify_witness(const ProthForm& form, const PrimalityVerdict& verdict);

}  // namespace rroot
