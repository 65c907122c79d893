#ifndef QPFD_ERRORS_HPP
#define QPFD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpfd {

// Exact division by an exact zero (rational, rational function, or field element).
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Evaluation of a rational function at a point where its denominator vanishes.
struct PoleAtSample : std::domain_error {
    explicit PoleAtSample(const std::string& what) : std::domain_error(what) {}
};

// A polynomial operation was asked to produce a negative-degree reversal or
// otherwise exceed a stated degree bound.
struct DegreeTooLarge : std::invalid_argument {
    explicit DegreeTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

// A pole list for a partial fraction decomposition contains a repeated value.
struct DuplicatePoles : std::invalid_argument {
    explicit DuplicatePoles(const std::string& what) : std::invalid_argument(what) {}
};

// The linear system handed to the elimination solver has no unique solution.
// With distinct poles this is unreachable; hitting it means a broken caller.
struct SingularSystem : std::logic_error {
    explicit SingularSystem(const std::string& what) : std::logic_error(what) {}
};

// Catalog lookup for an unknown identity name.
struct NotFound : std::out_of_range {
    explicit NotFound(const std::string& what) : std::out_of_range(what) {}
};

// Rejected text while parsing a polynomial, rational, or CLI value.
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qpfd

#endif  // QPFD_ERRORS_HPP
