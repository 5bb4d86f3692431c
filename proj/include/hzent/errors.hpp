#pragma once

#include <stdexcept>
#include <string>

namespace hzent {

/// Input outside the physical domain (m <= 0, omega <= 0, malformed grid, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Squeezing so close to maximal that the truncated Fock oracle cannot be built:
/// x below the configured floor, or the required n_max exceeds the dimension cap.
class SqueezingOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A root bracket on which the boson/fermion entropy difference does not change sign.
class NoSignChange : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Density operator failing the Hermitian / trace / positivity / diagonality checks.
class InvalidDensityOperator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace hzent
