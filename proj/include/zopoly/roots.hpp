#pragma once

#include <complex>
#include <vector>

#include "zopoly/int_poly.hpp"

namespace zopoly {

struct CertifiedRoots {
    std::vector<std::complex<double>> roots;
    std::vector<double> radii;  // Weierstrass disk radii; all roots lie in the union
};

/// Aberth-Ehrlich on the squarefree part of f, with a-posteriori
/// Weierstrass enclosure radii.  NumericError on non-convergence.
CertifiedRoots certified_roots(const IntPoly& f);

/// Distinct roots of f (multiplicities dropped).
std::vector<std::complex<double>> poly_roots(const IntPoly& f);

/// Maximum root modulus, accurate to tol (enclosure width <= tol).
double house(const IntPoly& f, double tol = 1e-9);

/// house(w) >= 2^(1/(4 deg w)) - tol, for irreducible monic non-cyclotomic w.
bool dimitrov_check(const IntPoly& w, double tol = 1e-9);

} // namespace zopoly
