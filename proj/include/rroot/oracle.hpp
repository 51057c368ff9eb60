#pragma once

// Exhaustive reference answers for small inputs. Everything here works on
// plain 64-bit integers with its own arithmetic, so agreement with the main
// modules is a real cross-check rather than a rerun of the same code.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rroot/ecroot.hpp"
#include "rroot/polyring.hpp"

namespace rroot::oracle {

inline constexpr std::uint64_t kDefaultBound = 5000;
inline constexpr std::uint64_t kTrialDivisionLimit = std::uint64_t{1} << 44;

class BoundExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Smallest prime factor of n >= 2 (n itself when prime).
std::uint64_t trial_division(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// {x in F_q : x^r = beta}, ascending.
std::vector<std::uint64_t> all_rth_roots(std::uint64_t q, std::uint64_t r, std::uint64_t beta,
                                         std::uint64_t bound = kDefaultBound);

/// {x in F_q^* : x is not an r-th power}, ascending.
std::vector<std::uint64_t> all_nonresidues(std::uint64_t q, std::uint64_t r, std::uint64_t bound = kDefaultBound);

/// Multiplicative order of every x in F_q^*.
std::map<std::uint64_t, std::uint64_t> element_orders(std::uint64_t q, std::uint64_t bound = kDefaultBound);

/// Order of a single x in F_q^* by repeated multiplication.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t x, std::uint64_t bound = kDefaultBound);

/// {x in F_q : f(x) = 0}, ascending; f must be nonzero over a prime modulus.
std::vector<std::uint64_t> poly_roots_bruteforce(const Poly& f, std::uint64_t bound = kDefaultBound);

/// Every affine point of the curve, lexicographic (infinity not included).
std::vector<Point> curve_points(const Curve& curve, std::uint64_t bound = kDefaultBound);

/// {P != inf : n*P = Q} by enumerating the curve with an independent group law.
std::vector<Point> nth_root_preimages(const Curve& curve, const Point& q, std::uint64_t n,
                                      std::uint64_t bound = kDefaultBound);

/// n*P by repeated addition with the same independent group law.
Point multiply_naive(const Curve& curve, const Point& p, std::uint64_t n, std::uint64_t bound = kDefaultBound);

}  // namespace rroot::oracle
