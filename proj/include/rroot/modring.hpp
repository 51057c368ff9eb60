#pragma once

// Residue arithmetic in Z/NZ. Every failed inversion surfaces as a
// ZeroDivisor carrying a proper divisor of N, so the same code serves
// prime fields and compositeness testing.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "rroot/natural.hpp"

namespace rroot {

/// A proper divisor g of the modulus (1 < g < n) uncovered by a failed inversion.
class ZeroDivisor : public std::runtime_error {
public:
    explicit ZeroDivisor(Natural divisor);
    const Natural& divisor() const noexcept { return divisor_; }

private:
    Natural divisor_;
};

/// Raised when an element does not satisfy x^(claimed group order) = 1.
class OrderAnomaly : public std::runtime_error {
public:
    explicit OrderAnomaly(Natural element);
    const Natural& element() const noexcept { return element_; }

private:
    Natural element_;
};

class Residue;

class Modulus {
public:
    /// Requires n >= 2.
    explicit Modulus(Natural n);
    explicit Modulus(std::uint64_t n) : Modulus(Natural(static_cast<unsigned long>(n))) {}

    const Natural& value() const noexcept { return *n_; }

    Residue operator()(const Natural& v) const;
    Residue operator()(std::uint64_t v) const;
    Residue zero() const;
    Residue one() const;

    friend bool operator==(const Modulus& a, const Modulus& b) noexcept
    {
        return a.n_ == b.n_ || *a.n_ == *b.n_;
    }

private:
    std::shared_ptr<const Natural> n_;
};

/// Canonical residue 0 <= value < n. Mixing moduli is a contract violation
/// and throws std::logic_error.
class Residue {
public:
    Residue(Modulus m, Natural v);

    const Natural& value() const noexcept { return value_; }
    const Modulus& modulus() const noexcept { return mod_; }
    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator-() const;
    Residue& operator+=(const Residue& o);
    Residue& operator-=(const Residue& o);
    Residue& operator*=(const Residue& o);

    /// Square-and-multiply; pow(0) == 1.
    Residue pow(const Natural& k) const;

    /// Throws std::domain_error for zero and ZeroDivisor when gcd(value, n) > 1.
    Residue inverse() const;

    friend bool operator==(const Residue& a, const Residue& b)
    {
        return a.mod_ == b.mod_ && a.value_ == b.value_;
    }

private:
    struct Reduced {};
    Residue(Modulus m, Natural v, Reduced) : value_(std::move(v)), mod_(std::move(m)) {}
    void require_same(const Residue& o) const;

    Natural value_;
    Modulus mod_;
};

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// value = prod(prime^exponent) * cofactor, primes ascending and distinct.
struct FactoredInteger {
    std::vector<PrimePower> factors;
    Natural cofactor = 1;

    Natural value() const;
};

/// Exact multiplicative order of x given the fully factored order of its group
/// (cofactor must be 1). Throws OrderAnomaly if x^order != 1.
Natural order(const Residue& x, const FactoredInteger& group_order);

/// Extended Euclid over signed integers: returns g = u*a + v*b.
struct Bezout {
    Natural g;
    Natural u;
    Natural v;
};
Bezout extended_gcd(const Natural& a, const Natural& b);

}  // namespace rroot
