#pragma once

#include <stdexcept>
#include <string>

namespace kbonacci {

/// An operation was asked to act on a deformation family it does not support
/// (e.g. the q-commutator conversion on a q- or p,q-bracket oscillator).
struct UnsupportedFamilyError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A denominator of the quasi-Fibonacci ratio formulas vanished at a level.
struct SingularPointError : std::domain_error {
    SingularPointError(long long level, std::string expression)
        : std::domain_error("singular point at n=" + std::to_string(level) + ": " +
                            expression + " = 0"),
          n(level),
          vanished(std::move(expression)) {}

    long long n;
    std::string vanished;
};

/// A verification window reaches outside the data covered by a track.
struct CoverageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace kbonacci
