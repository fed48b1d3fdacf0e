#pragma once

#include <stdexcept>
#include <string>

namespace zopoly {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisibilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScheduleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct HypothesisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown by construct_conjugate_product when the input is not divisible by
// a product of two non-reciprocal irreducibles.  Carries the classification
// counts (with multiplicity) of the input's irreducible factors.
struct NotTwoNonReciprocalError : std::invalid_argument {
    long long nonreciprocal_count;
    long long reciprocal_cyclotomic_count;
    long long reciprocal_noncyclotomic_count;

    NotTwoNonReciprocalError(long long nr, long long rc, long long rnc)
        : std::invalid_argument("fewer than two non-reciprocal irreducible factors (" +
                                std::to_string(nr) + " non-reciprocal, " +
                                std::to_string(rc) + " cyclotomic, " +
                                std::to_string(rnc) + " reciprocal non-cyclotomic)"),
          nonreciprocal_count(nr),
          reciprocal_cyclotomic_count(rc),
          reciprocal_noncyclotomic_count(rnc) {}
};

} // namespace zopoly
