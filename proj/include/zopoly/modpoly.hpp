#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zopoly/int_poly.hpp"

namespace zopoly {

/// Polynomial over the prime field F_p, p < 2^31.  Coefficients in [0, p),
/// trimmed (empty vector is the zero polynomial).
struct ModPoly {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> c;

    ModPoly() = default;
    ModPoly(std::uint64_t prime, std::vector<std::uint64_t> coeffs);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    std::uint64_t leading() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    void trim();

    bool operator==(const ModPoly& o) const { return p == o.p && c == o.c; }
    bool operator<(const ModPoly& o) const;  // degree, then coeffs from leading
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

ModPoly mp_reduce(const IntPoly& f, std::uint64_t p);
IntPoly mp_lift(const ModPoly& f);  // coefficients in [0, p)

ModPoly mp_add(const ModPoly& a, const ModPoly& b);
ModPoly mp_sub(const ModPoly& a, const ModPoly& b);
ModPoly mp_mul(const ModPoly& a, const ModPoly& b);
ModPoly mp_scale(const ModPoly& a, std::uint64_t s);
ModPoly mp_make_monic(const ModPoly& a);
/// Euclidean division (divisor's leading coefficient must be invertible).
std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& b);
ModPoly mp_mod(const ModPoly& a, const ModPoly& b);
ModPoly mp_gcd(const ModPoly& a, const ModPoly& b);  // monic (or zero)
ModPoly mp_derivative(const ModPoly& a);
ModPoly mp_pow_mod(const ModPoly& base, const Int& e, const ModPoly& mod);
/// Inverse of a modulo m over F_p (extended Euclid); DomainError if not coprime.
ModPoly mp_inverse_mod(const ModPoly& a, const ModPoly& m);

struct ModFactorization {
    std::uint64_t p = 0;
    std::uint64_t lc = 1;  // unit so that lc * prod(factors^mult) == f mod p
    std::vector<std::pair<ModPoly, int>> factors;  // monic irreducible, sorted
};

/// Distinct-degree then equal-degree splitting (with squarefree and p-th
/// power handling).  BadPrimeError if p divides the leading coefficient.
ModFactorization factor_mod_p(const IntPoly& f, std::uint64_t p);

/// Degrees (with multiplicity) of the irreducible factors of the squarefree
/// part-of-f mod p, from distinct-degree splitting only.  Cheap; used by the
/// degree-set sieve.  Requires f squarefree mod p.
std::vector<int> modp_factor_degrees(const ModPoly& f);

} // namespace zopoly
