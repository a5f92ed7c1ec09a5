#pragma once

#include <stdexcept>
#include <string>

namespace latgm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed instance file or field; the message names the offending field.
struct ParseError : Error {
    using Error::Error;
};

/// The lattice is not natural (rank does not equal cardinality).
struct NotNaturalError : Error {
    using Error::Error;
};

/// Support of the distribution is not a natural distributive lattice.
struct NotNaturalSupportError : Error {
    using Error::Error;
};

/// A separation query with overlapping or empty A/B.
struct InvalidTripleError : Error {
    using Error::Error;
};

/// A CI statement operation that requires A also B also C to cover [m].
struct UnsaturatedError : Error {
    using Error::Error;
};

/// A parameter matrix with an all-zero column where one is forbidden.
struct EmptyColumnError : Error {
    using Error::Error;
};

/// Support set fails the feasibility test.
struct NotFeasibleError : Error {
    using Error::Error;
};

/// Supplied linear functional does not certify the face.
struct BadCertificateError : Error {
    using Error::Error;
};

/// A deformation exponent is not a nonnegative integer.
struct NonIntegerExponentError : Error {
    using Error::Error;
};

/// Two matrices whose column label sets differ.
struct ColumnMismatchError : Error {
    using Error::Error;
};

/// A cover pair of the support poset is missing from the graph.
struct MissingCoverEdgeError : Error {
    int upper, lower;
    MissingCoverEdgeError(int i, int j, const std::string& msg)
        : Error(msg), upper(i), lower(j) {}
};

/// A pairwise Markov binomial found violated during factorization.
struct PairwiseViolationError : Error {
    unsigned set_bits;
    int i, j;
    PairwiseViolationError(unsigned s, int i_, int j_, const std::string& msg)
        : Error(msg), set_bits(s), i(i_), j(j_) {}
};

/// A clique with no maximum element, certifying the graph exceeds the
/// comparability graph of the poset.
struct NotComparabilitySubgraphError : Error {
    unsigned clique_bits;
    NotComparabilitySubgraphError(unsigned c, const std::string& msg)
        : Error(msg), clique_bits(c) {}
};

} // namespace latgm
