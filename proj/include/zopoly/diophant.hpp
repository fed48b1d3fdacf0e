#pragma once

#include <complex>
#include <string>
#include <vector>

#include "zopoly/int_poly.hpp"
#include "zopoly/support_set.hpp"

namespace zopoly {

/// floor of the r-th root of n >= 0
Int iroot(const Int& n, int r);

struct BoxParameters {
    Rat epsilon;     // in (0, 1/2]
    long long kappa; // floor(1/epsilon) + 1
    Rat V;           // max{kappa^(2k-2)/2 * (eps - 1/kappa)^(-1), kappa^(k-1) + eps}
    int k = 2;
};

/// Lemma-level parameters for a caller-chosen epsilon.
BoxParameters make_box_parameters(int k, const Rat& epsilon);

/// epsilon = 1/(floor(N^(1/(2k+1))) - 1); asserts kappa == floor(N^(1/(2k+1)))
/// and V < N^(2k/(2k+1)) exactly.  ScheduleError when the floor is < 4.
BoxParameters parameter_schedule(int k, long long N);

struct IndexDecomp {
    long long m = 0;  // nearest integer to n_j / d
    long long t = 0;  // signed remainder, n_j = m*d + t
    long long w = 0;  // nearest integer to t_pigeonhole * n_j / n_k
};

struct BoxCertificate {
    long long d = 0;
    std::vector<IndexDecomp> per_index;  // j = 1..k
    long long t = 0;                     // pigeonhole witness
    long long mprime = 0;                // max m_j = m_k
    long long tprime = 0;                // max{0, t_j}
    long long tdoubleprime = 0;          // -min{0, t_j}
};

/// Smallest positive t <= kappa^(k-1) with ||t n_j / n_k|| < 1/kappa for
/// all j <= k-1, exact rational arithmetic.
long long pigeonhole_t(const SupportSet& n, long long kappa);

/// Constructive Dirichlet-box modulus: d chosen smallest in the proof's
/// narrow interval, full certificate validation.  HypothesisError when the
/// construction fails to validate (guaranteed to succeed for n_k >= V).
BoxCertificate find_modulus(const SupportSet& n, const BoxParameters& params);

struct Decomposition {
    std::vector<long long> m, t;  // j = 1..k
    long long mprime = 0, tprime = 0, tdoubleprime = 0;
};

Decomposition decompose(const SupportSet& n, long long d);

struct BoundCheck {
    std::string name;
    bool pass = false;
    double slack = 0;  // bound minus value; positive when passing
};

struct BoundsReport {
    std::vector<BoundCheck> checks;
    bool headline_pass = false;  // 2(t'+t'')m' < 9 N^(2k/(2k+1))
    bool all_pass() const;
};

BoundsReport verify_bounds(const BoxCertificate& cert, int k, long long N);

/// (36 log k / log 2) * N^(2k/(2k+1)); DomainError for k < 3.
double gap_bound(int k, double N);

/// For every root with |xi| > 1: (n_k - n_{k-1}) log|xi| <= log k + slack,
/// slack derived from the modulus accuracy tol.
bool root_gap_check(const SupportSet& n, const std::vector<std::complex<double>>& roots,
                    double tol);

/// All BoxCertificate invariants, exact; returns false with no throw.
bool validate_certificate(const SupportSet& n, const BoxParameters& params,
                          const BoxCertificate& cert);

} // namespace zopoly
