#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "zopoly/support_set.hpp"

namespace zopoly {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients.  Coefficient i is the coefficient of x^i; the vector is
/// trimmed so the leading coefficient is non-zero (zero polynomial is the
/// empty vector, degree -1).
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly constant(Int v);
    static IntPoly monomial(Int coeff, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t term_count() const;
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Int operator()(const Int& x) const;  // Horner

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);

  private:
    std::vector<Int> c_;
    void trim();
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

IntPoly derivative(const IntPoly& f);
IntPoly pow(const IntPoly& f, unsigned e);

Int content(const IntPoly& f);             // >= 0; gcd of coefficients
IntPoly primitive_part(const IntPoly& f);  // f / content(f), sign of lc kept

/// x^{deg f} f(1/x): coefficient sequence reversed.
IntPoly reciprocal(const IntPoly& f);
bool is_reciprocal(const IntPoly& f);  // f == +-reciprocal(f)

/// Exact division in Z[x]; returns false if g does not divide f with an
/// integer-coefficient quotient.
bool try_exact_divide(const IntPoly& f, const IntPoly& g, IntPoly& q);
IntPoly exact_divide(const IntPoly& f, const IntPoly& g);

/// Primitive gcd with positive leading coefficient (subresultant PRS).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

IntPoly poly_from_support(const SupportSet& s);
/// Inverse of poly_from_support; DomainError unless f is 0,1 with f(0)=1.
SupportSet support_of(const IntPoly& f);

/// Total-order comparator: by degree, then coefficients from leading down.
bool poly_less(const IntPoly& a, const IntPoly& b);

/// Accepts "1 + x^3 + x^7", "2x^3+3x-1", "-x", "5", ...
IntPoly parse_poly(const std::string& text);
/// Accepts either the polynomial grammar or a support list "0,3,7".
IntPoly parse_poly_or_support(const std::string& text);
std::string to_string(const IntPoly& f);

} // namespace zopoly
