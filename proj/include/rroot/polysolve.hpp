#pragma once

// Root finding over a prime field F_q by descent through the subgroup tower
// of F_q^*: a product f of distinct linear factors divides x^d - a, and each
// r-th root of a splits x^d - a into r coprime pieces x^(d/r) - zeta^i b.

#include <stdexcept>
#include <vector>

#include "rroot/polyring.hpp"
#include "rroot/rthroot.hpp"

namespace rroot {

/// The descent reached d = 1 (or lost the f | x^d - a invariant) without a
/// split, so the input was not a product of distinct linear factors.
class InputNotLinearProduct : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Monic polynomial with the same roots as f, each once. Requires a prime modulus.
Poly squarefree_part(const Poly& f);

/// gcd(f, x^q - x): the product of the linear factors of a squarefree f.
Poly linear_part(const Poly& f);

/// A monic strict factor of f, where f is monic, f(0) != 0 and f is a
/// product of at least two distinct linear factors. Needs t = 1.
Poly split_linear_product(const Poly& f, const FieldProfile& profile);

/// All roots of f != 0 in F_q, ascending. Needs t = 1.
std::vector<Residue> roots(const Poly& f, const FieldProfile& profile);

}  // namespace rroot
