#pragma once

#include <utility>
#include <vector>

#include "zopoly/int_poly.hpp"

namespace zopoly {

enum class FactorClass {
    NonReciprocal,
    ReciprocalCyclotomic,
    ReciprocalNonCyclotomic,
};

struct FactorEntry {
    IntPoly poly;  // irreducible, primitive, positive leading coefficient
    int multiplicity = 1;
    FactorClass cls = FactorClass::NonReciprocal;
    long long cyclotomic_m = 0;  // set when cls == ReciprocalCyclotomic
};

struct FactorizationReport {
    int unit = 1;     // +-1
    Int content = 1;  // positive
    std::vector<FactorEntry> factors;  // canonically sorted

    IntPoly reassemble() const;
    long long count_class(FactorClass c) const;  // with multiplicity
};

/// Yun's algorithm; returns primitive positive-lc squarefree parts with
/// multiplicities.  Input must be primitive with positive leading coeff.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

/// Squarefree decomposition + Zassenhaus (Hensel lifting to the Mignotte
/// bound, subset recombination).
FactorizationReport factor_over_integers(const IntPoly& f);

/// Degree-set sieve over several primes, full factorization as fallback.
bool is_irreducible(const IntPoly& f);

/// f divided by its irreducible reciprocal factors (positive-lc, full
/// multiplicity) and by |content|; the sign of f is retained.
IntPoly nonreciprocal_part(const IntPoly& f);

/// g = w1 * reciprocal(w2) for the proof's split f = w1*w2; 0,1-polynomial
/// with f's term count, g not in {f, reciprocal(f)}, g*g~ == f*f~.
/// NotTwoNonReciprocalError when f lacks two non-reciprocal factors.
IntPoly construct_conjugate_product(const IntPoly& f);

} // namespace zopoly
