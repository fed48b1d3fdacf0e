#pragma once

#include <array>
#include <string>
#include <vector>

#include "zopoly/diophant.hpp"
#include "zopoly/int_poly.hpp"
#include "zopoly/support_set.hpp"

namespace zopoly {

struct Point2 {
    long long x = 0, y = 0;
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point2& o) const { return x != o.x ? x < o.x : y < o.y; }
};

struct BiTerm {
    Int coeff;
    long long e1 = 0, e2 = 0;  // exponents of the two variables
};

/// Bivariate polynomial as a normalized term list (non-zero coefficients,
/// distinct exponent pairs, sorted by (e1, e2)).
struct BivariateSupport {
    std::vector<BiTerm> terms;

    static BivariateSupport from_terms(std::vector<BiTerm> raw);  // merges, drops zeros
    bool is_zero() const { return terms.empty(); }
    long long deg1() const;  // degree in the first variable
    long long deg2() const;
};

BivariateSupport bivar_mul(const BivariateSupport& a, const BivariateSupport& b);
BivariateSupport parse_bivariate(const std::string& text);  // two variable letters
std::string to_string(const BivariateSupport& p);

/// Convex polytope in R^2: CCW vertex list starting from the lowest-y
/// (then lowest-x) vertex; a point or a segment when degenerate.
struct Polytope2 {
    std::vector<Point2> vertices;
    bool operator==(const Polytope2& o) const { return vertices == o.vertices; }
};

enum class EdgeKind { Lower, Upper, LeftVertical, RightVertical };

Polytope2 convex_hull(std::vector<Point2> pts);
Polytope2 newton_polytope(const BivariateSupport& p);  // DomainError on zero

/// Directed edge cycle; a segment contributes both directions (its lower
/// and upper edges in the paper's terminology).
std::vector<std::pair<Point2, EdgeKind>> edge_vectors(const Polytope2& p);

/// Edge-vector merge (angle-sorted concatenation, parallel edges fused).
Polytope2 minkowski_sum(const Polytope2& P, const Polytope2& Q);

/// N(p*q) == N(p) + N(q), product computed with cancellation.
bool verify_ostrowski(const BivariateSupport& p, const BivariateSupport& q);

struct GHPair {
    BivariateSupport G, H;
    long long a = 0;  // H(x, x^d) == x^a * reciprocal(F)(x)
};

/// G = y^t'' + sum_j y^(t_j+t'') z^(m_j), H = y^t' z^m' + sum_j y^(t'-t_j)
/// z^(m'-m_j); ConsistencyError if cert does not decompose n.
GHPair build_GH(const SupportSet& n, const BoxCertificate& cert);

/// Distinct index quadruples i<j, u<v, (i,j)<(u,v) with
/// (n_i-n_j)(m_u-m_v) == (n_u-n_v)(m_i-m_j).
std::vector<std::array<int, 4>> parallel_pair_scan(const SupportSet& n,
                                                   const std::vector<long long>& m);

/// Resultant of G and H with respect to the second variable, fraction-free
/// Bareiss elimination; ResourceError beyond the dimension cap.
IntPoly sylvester_resultant_z(const BivariateSupport& G, const BivariateSupport& H,
                              int dim_cap = 64);

} // namespace zopoly
