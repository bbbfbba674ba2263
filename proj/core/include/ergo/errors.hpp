#pragma once

#include <stdexcept>

namespace ergo {

// Input failed structural or numerical validation: wrong shape, broken
// Hermiticity / positivity / trace, out-of-range parameter, bad spectrum.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The operation needs both marginals governed by linear ladders with one
// common spacing and the supplied system does not satisfy that.
class HamiltonianError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The underlying eigensolver did not converge.
class EigensolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ergo
