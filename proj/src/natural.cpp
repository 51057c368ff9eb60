#include "rroot/natural.hpp"

#include <cctype>
#include <stdexcept>

namespace rroot {

Natural parse_natural(std::string_view text)
{
    std::string_view digits = text;
    int base = 10;
    if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
        digits.remove_prefix(2);
        base = 16;
    }
    if (digits.empty())
        throw std::invalid_argument("empty number");
    for (char c : digits) {
        const bool ok = base == 10 ? std::isdigit(static_cast<unsigned char>(c)) != 0
                                   : std::isxdigit(static_cast<unsigned char>(c)) != 0;
        if (!ok)
            throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
    }
    Natural n;
    if (n.set_str(std::string(digits), base) != 0)
        throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
    return n;
}

std::string to_string(const Natural& n)
{
    return n.get_str(10);
}

std::uint64_t to_u64(const Natural& n)
{
    if (sgn(n) < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        throw std::overflow_error("value does not fit in 64 bits: " + to_string(n));
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
    return out;
}

Natural ipow(std::uint64_t base, unsigned exponent)
{
    Natural b;
    mpz_import(b.get_mpz_t(), 1, -1, sizeof(base), 0, 0, &base);
    Natural out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
    return out;
}

Natural isqrt(const Natural& n)
{
    Natural out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

bool is_small_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t p = 3; p * p <= n; p += 2)
        if (n % p == 0)
            return false;
    return true;
}

}  // namespace rroot
