#include "rroot/modring.hpp"

namespace rroot {

ZeroDivisor::ZeroDivisor(Natural divisor)
    : std::runtime_error("zero divisor: modulus has factor " + to_string(divisor)),
      divisor_(std::move(divisor))
{
}

OrderAnomaly::OrderAnomaly(Natural element)
    : std::runtime_error("order anomaly at element " + to_string(element)),
      element_(std::move(element))
{
}

Modulus::Modulus(Natural n)
{
    if (n < 2)
        throw std::invalid_argument("modulus must be at least 2, got " + to_string(n));
    n_ = std::make_shared<const Natural>(std::move(n));
}

Residue Modulus::operator()(const Natural& v) const
{
    return Residue(*this, v);
}

Residue Modulus::operator()(std::uint64_t v) const
{
    return Residue(*this, Natural(static_cast<unsigned long>(v)));
}

Residue Modulus::zero() const
{
    return (*this)(std::uint64_t{0});
}

Residue Modulus::one() const
{
    return (*this)(std::uint64_t{1});
}

Residue::Residue(Modulus m, Natural v) : mod_(std::move(m))
{
    mpz_mod(value_.get_mpz_t(), v.get_mpz_t(), mod_.value().get_mpz_t());
}

void Residue::require_same(const Residue& o) const
{
    if (!(mod_ == o.mod_))
        throw std::logic_error("residues with different moduli combined");
}

Residue Residue::operator+(const Residue& o) const
{
    Residue out(*this);
    out += o;
    return out;
}

Residue Residue::operator-(const Residue& o) const
{
    Residue out(*this);
    out -= o;
    return out;
}

Residue Residue::operator*(const Residue& o) const
{
    Residue out(*this);
    out *= o;
    return out;
}

Residue Residue::operator-() const
{
    if (is_zero())
        return *this;
    return Residue(mod_, mod_.value() - value_, Reduced{});
}

Residue& Residue::operator+=(const Residue& o)
{
    require_same(o);
    value_ += o.value_;
    if (value_ >= mod_.value())
        value_ -= mod_.value();
    return *this;
}

Residue& Residue::operator-=(const Residue& o)
{
    require_same(o);
    value_ -= o.value_;
    if (sgn(value_) < 0)
        value_ += mod_.value();
    return *this;
}

Residue& Residue::operator*=(const Residue& o)
{
    require_same(o);
    mpz_mul(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
    mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), mod_.value().get_mpz_t());
    return *this;
}

Residue Residue::pow(const Natural& k) const
{
    if (sgn(k) < 0)
        throw std::domain_error("negative exponent; invert first");
    Natural out;
    mpz_powm(out.get_mpz_t(), value_.get_mpz_t(), k.get_mpz_t(), mod_.value().get_mpz_t());
    return Residue(mod_, std::move(out), Reduced{});
}

Residue Residue::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    Natural g;
    mpz_gcd(g.get_mpz_t(), value_.get_mpz_t(), mod_.value().get_mpz_t());
    if (g != 1)
        throw ZeroDivisor(g);
    Natural out;
    mpz_invert(out.get_mpz_t(), value_.get_mpz_t(), mod_.value().get_mpz_t());
    return Residue(mod_, std::move(out), Reduced{});
}

Natural FactoredInteger::value() const
{
    Natural out = cofactor;
    for (const auto& pp : factors)
        out *= ipow(pp.prime, pp.exponent);
    return out;
}

Natural order(const Residue& x, const FactoredInteger& group_order)
{
    if (x.is_zero())
        throw std::domain_error("order of zero");
    if (group_order.cofactor != 1)
        throw std::invalid_argument("order needs a fully factored group order");
    Natural ord = group_order.value();
    if (!x.pow(ord).is_one())
        throw OrderAnomaly(x.value());
    for (const auto& pp : group_order.factors) {
        const Natural p = static_cast<unsigned long>(pp.prime);
        for (unsigned i = 0; i < pp.exponent; ++i) {
            if (!x.pow(ord / p).is_one())
                break;
            ord /= p;
        }
    }
    return ord;
}

Bezout extended_gcd(const Natural& a, const Natural& b)
{
    Bezout out;
    mpz_gcdext(out.g.get_mpz_t(), out.u.get_mpz_t(), out.v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace rroot
