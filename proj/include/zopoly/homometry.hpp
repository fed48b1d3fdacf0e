#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zopoly/int_poly.hpp"
#include "zopoly/support_set.hpp"

namespace zopoly {

/// Symmetric multiset A-A, stored as the nonnegative side.
struct DifferenceMultiset {
    std::vector<std::pair<long long, long long>> counts;  // (difference >= 0, count), sorted
    long long cardinality = 0;                            // |A| (= count at 0)

    bool operator==(const DifferenceMultiset& o) const {
        return cardinality == o.cardinality && counts == o.counts;
    }
    /// Canonical length-prefixed (difference, count) byte encoding.
    std::string encode() const;
};

DifferenceMultiset difference_multiset(const SupportSet& A);

/// F * reciprocal(F); coefficient of x^(d+s) is the count at difference s.
IntPoly autocorrelation_poly(const SupportSet& A);

/// {max(A) - a : a in A}
SupportSet mirror(const SupportSet& A);

/// All B in {0..d} with 0,d in B, |B| = |A| and the same difference
/// multiset; turnpike backtracking on the largest unplaced difference.
/// Sorted; always contains A and mirror(A).
std::vector<SupportSet> solve_autocorrelation(const SupportSet& A);

struct HomometricWitness {
    int i, g, h;  // m_k - m_i == n_g - n_h with g != k
};

struct UniquenessReport {
    bool unique = true;
    std::vector<SupportSet> solutions;
    struct Extra {
        SupportSet set;
        std::vector<HomometricWitness> witnesses;
    };
    std::vector<Extra> extras;
};

UniquenessReport uniqueness_report(const SupportSet& A);

struct PhiImageCensus {
    int n = 0;
    std::uint64_t distinct = 0;    // distinct difference multisets
    std::uint64_t symmetric = 0;   // R_n: sets with A == mirror(A)
    std::uint64_t subsets = 0;     // 2^n processed
    std::uint64_t hash_collisions = 0;
    double ratio() const;          // distinct / 2^(n-1)
};

/// Exhaustive enumeration over A in {0..n} with 0 in A, Gray-code order,
/// 128-bit-hash keyed with exact collision handling.
PhiImageCensus census_phi_image(int n, int workers = 1, int max_n_budget = 26);

/// All A (canonicalized up to mirror) whose multiset has a preimage outside
/// {A, mirror(A)}.
std::vector<SupportSet> exceptional_sets(int n, int max_n_budget = 20);

} // namespace zopoly
