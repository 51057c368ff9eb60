#include "rroot/polyring.hpp"

#include <sstream>
#include <stdexcept>

namespace rroot {

Poly::Poly(Modulus m) : mod_(std::move(m)) {}

Poly::Poly(Modulus m, std::vector<Natural> coeffs) : mod_(std::move(m)), coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), mod_.value().get_mpz_t());
    trim();
}

Poly Poly::constant(const Residue& c)
{
    return Poly(c.modulus(), {c.value()});
}

Poly Poly::monomial(const Residue& c, std::size_t degree)
{
    std::vector<Natural> coeffs(degree + 1);
    coeffs[degree] = c.value();
    return Poly(c.modulus(), std::move(coeffs));
}

Poly Poly::x(const Modulus& m)
{
    return monomial(m.one(), 1);
}

Poly Poly::linear(const Residue& root)
{
    return Poly(root.modulus(), {(-root).value(), Natural(1)});
}

Poly Poly::binomial(std::size_t r, const Residue& beta)
{
    std::vector<Natural> coeffs(r + 1);
    coeffs[0] = (-beta).value();
    coeffs[r] += 1;
    return Poly(beta.modulus(), std::move(coeffs));
}

void Poly::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

void Poly::require_same(const Modulus& m) const
{
    if (!(mod_ == m))
        throw std::logic_error("polynomials over different moduli combined");
}

Residue Poly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? mod_(coeffs_[i]) : mod_.zero();
}

Residue Poly::leading() const
{
    if (coeffs_.empty())
        throw std::domain_error("zero polynomial has no leading coefficient");
    return mod_(coeffs_.back());
}

Poly Poly::operator+(const Poly& o) const
{
    require_same(o.mod_);
    Poly out(*this);
    if (out.coeffs_.size() < o.coeffs_.size())
        out.coeffs_.resize(o.coeffs_.size());
    const Natural& n = mod_.value();
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        out.coeffs_[i] += o.coeffs_[i];
        if (out.coeffs_[i] >= n)
            out.coeffs_[i] -= n;
    }
    out.trim();
    return out;
}

Poly Poly::operator-() const
{
    Poly out(*this);
    for (auto& c : out.coeffs_)
        if (sgn(c) != 0)
            c = mod_.value() - c;
    return out;
}

Poly Poly::operator-(const Poly& o) const
{
    return *this + (-o);
}

Poly Poly::operator*(const Poly& o) const
{
    require_same(o.mod_);
    if (is_zero() || o.is_zero())
        return Poly(mod_);
    std::vector<Natural> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), o.coeffs_[j].get_mpz_t());
    }
    return Poly(mod_, std::move(out));
}

Poly Poly::operator*(const Residue& c) const
{
    require_same(c.modulus());
    std::vector<Natural> out = coeffs_;
    for (auto& v : out)
        v *= c.value();
    return Poly(mod_, std::move(out));
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& m)
{
    if (m.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (!(f.modulus() == m.modulus()))
        throw std::logic_error("polynomials over different moduli combined");
    const Modulus& mod = f.modulus();
    const Natural& n = mod.value();
    if (f.degree() < m.degree())
        return {Poly(mod), f};

    const bool monic_divisor = m.is_monic();
    const Natural lead_inv = monic_divisor ? Natural(1) : m.leading().inverse().value();
    const auto& mc = m.coefficients();
    const std::size_t dm = mc.size() - 1;

    std::vector<Natural> r = f.coefficients();
    std::vector<Natural> q(r.size() - dm);
    Natural c;
    for (std::size_t i = r.size(); i-- > dm;) {
        mpz_mod(r[i].get_mpz_t(), r[i].get_mpz_t(), n.get_mpz_t());
        if (sgn(r[i]) == 0)
            continue;
        c = r[i] * lead_inv;
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
        q[i - dm] = c;
        for (std::size_t j = 0; j < dm; ++j)
            mpz_submul(r[i - dm + j].get_mpz_t(), c.get_mpz_t(), mc[j].get_mpz_t());
        r[i] = 0;
    }
    r.resize(dm);
    return {Poly(mod, std::move(q)), Poly(mod, std::move(r))};
}

Poly rem(const Poly& f, const Poly& m)
{
    return divrem(f, m).second;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m)
{
    return rem(a * b, m);
}

Poly powmod(const Poly& base, const Natural& k, const Poly& m)
{
    if (sgn(k) < 0)
        throw std::domain_error("negative exponent");
    Poly result = rem(Poly::constant(base.modulus().one()), m);
    const Poly b = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    if (sgn(k) == 0)
        return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(k.get_mpz_t(), i))
            result = mulmod(result, b, m);
    }
    return result;
}

Poly monic(const Poly& f)
{
    if (f.is_zero() || f.is_monic())
        return f;
    return f * f.leading().inverse();
}

Poly gcd(const Poly& f, const Poly& g)
{
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("gcd of two zero polynomials");
    Poly a = f;
    Poly b = g;
    while (!b.is_zero()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Residue eval(const Poly& f, const Residue& x0)
{
    if (!(f.modulus() == x0.modulus()))
        throw std::logic_error("evaluation point over a different modulus");
    const Natural& n = f.modulus().value();
    Natural acc = 0;
    const auto& c = f.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x0.value();
        acc += c[i];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
    }
    return f.modulus()(acc);
}

Poly derivative(const Poly& f)
{
    const auto& c = f.coefficients();
    if (c.size() <= 1)
        return Poly(f.modulus());
    std::vector<Natural> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = c[i] * static_cast<unsigned long>(i);
    return Poly(f.modulus(), std::move(out));
}

Poly parse_poly(std::string_view text, const Modulus& m)
{
    std::vector<Natural> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view item = text.substr(start, end - start);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        bool negative = false;
        if (!item.empty() && item.front() == '-') {
            negative = true;
            item.remove_prefix(1);
        }
        Natural v = parse_natural(item);
        if (negative)
            v = -v;
        coeffs.push_back(std::move(v));
        start = end + 1;
    }
    return Poly(m, std::move(coeffs));
}

std::string format_coefficients(const Poly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& c : f.coefficients()) {
        if (!out.empty())
            out += ',';
        out += to_string(c);
    }
    return out;
}

std::string to_string(const Poly& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = f.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        const bool unit = c[i] == 1 && i > 0;
        if (!unit)
            os << to_string(c[i]);
        if (i > 0) {
            if (!unit)
                os << '*';
            os << 'x';
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

}  // namespace rroot
