#pragma once

// Dense univariate polynomials over Z/NZ, constant term first.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rroot/modring.hpp"

namespace rroot {

class Poly {
public:
    /// The zero polynomial.
    explicit Poly(Modulus m);
    /// Coefficients are reduced mod n and trailing zeros trimmed.
    Poly(Modulus m, std::vector<Natural> coeffs);

    static Poly constant(const Residue& c);
    /// c * x^degree
    static Poly monomial(const Residue& c, std::size_t degree);
    static Poly x(const Modulus& m);
    /// x - root
    static Poly linear(const Residue& root);
    /// x^r - beta
    static Poly binomial(std::size_t r, const Residue& beta);

    const Modulus& modulus() const noexcept { return mod_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    const std::vector<Natural>& coefficients() const noexcept { return coeffs_; }
    Residue coeff(std::size_t i) const;
    Residue leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Residue& c) const;
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b)
    {
        return a.mod_ == b.mod_ && a.coeffs_ == b.coeffs_;
    }

private:
    void trim();
    void require_same(const Modulus& m) const;

    Modulus mod_;
    std::vector<Natural> coeffs_;
};

/// Quotient and remainder; inverts the leading coefficient of m when it is
/// not 1 (ZeroDivisor on failure). m = 0 throws std::domain_error.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& m);
Poly rem(const Poly& f, const Poly& m);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& base, const Natural& k, const Poly& m);

/// Scales to leading coefficient 1.
Poly monic(const Poly& f);

/// Monic gcd by Euclid. Both zero throws std::domain_error.
Poly gcd(const Poly& f, const Poly& g);

Residue eval(const Poly& f, const Residue& x0);
Poly derivative(const Poly& f);

/// "c0,c1,...,cd" with optional leading '-' on a coefficient.
Poly parse_poly(std::string_view text, const Modulus& m);
std::string format_coefficients(const Poly& f);
/// Human-readable, e.g. "x^2 + 10".
std::string to_string(const Poly& f);

}  // namespace rroot
