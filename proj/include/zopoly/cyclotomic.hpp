#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zopoly/int_poly.hpp"

namespace zopoly {

long long euler_phi(long long m);
int moebius(long long m);
std::vector<long long> divisors(long long m);

/// m-th cyclotomic polynomial, monic of degree phi(m).  Memoized.
IntPoly cyclotomic_poly(long long m);

/// Phi_m(v) via prod_{d|m} (v^d - 1)^{mu(m/d)}, without building Phi_m.
Int cyclotomic_value(long long m, const Int& v);

struct CyclotomicFactorization {
    std::vector<std::pair<long long, int>> factors;  // (m, multiplicity)
    IntPoly part;                                    // no cyclotomic factor left

    IntPoly reassemble() const;
};

/// Sparse test: reduces the exponents of s mod m and tests the reduced
/// low-degree polynomial, never densifying the full-degree input.
bool divides_cyclotomic(const SupportSet& s, long long m);

CyclotomicFactorization remove_cyclotomic_part(const IntPoly& f);

/// For irreducible monic w: the m with w == Phi_m, if any.
std::optional<long long> cyclotomic_index(const IntPoly& w);

} // namespace zopoly
