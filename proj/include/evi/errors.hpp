#ifndef EVI_ERRORS_HPP
#define EVI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evi {

// Base class for all library failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Data file could not be turned into a valid sample.
struct IngestionError : Error {
    using Error::Error;
};

// Order-statistic index out of range.
struct IndexError : Error {
    using Error::Error;
};

// Ties among the order statistics an estimator reads.
struct TieError : Error {
    using Error::Error;
};

// Z_n = 0: the defining equation has no finite root.
struct RootAtInfinityError : Error {
    using Error::Error;
};

// No sign change of H_n - 1 within the search cap.
struct BracketError : Error {
    using Error::Error;
};

// Second log-moment degenerate in the moment estimator.
struct DegenerateMomentError : Error {
    using Error::Error;
};

// Requested limit law has no explicit form (xi = -1/2).
struct UnsupportedLawError : Error {
    using Error::Error;
};

// Invalid experiment or CLI configuration.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace evi

#endif  // EVI_ERRORS_HPP
