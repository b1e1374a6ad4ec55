#ifndef SPLITREC_ERRORS_HPP
#define SPLITREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace splitrec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction-time certification failures.
struct NotGaloisError : Error {
    using Error::Error;
};
struct NotIrreducibleError : Error {
    using Error::Error;
};

// Evaluation refusals (normal control flow for callers that probe primes).
struct BadPrimeError : Error {
    explicit BadPrimeError(unsigned long p)
        : Error("prime " + std::to_string(p) + " is in the bad set of this recurrence"), prime(p) {}
    unsigned long prime;
};
struct RamifiedError : Error {
    explicit RamifiedError(unsigned long p, const std::string& what)
        : Error("p=" + std::to_string(p) + ": " + what), prime(p) {}
    unsigned long prime;
};

// Internal-consistency failures: these indicate a bug and must surface loudly.
struct SingularSystemError : Error {
    using Error::Error;
};
struct NonRationalOutputError : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace splitrec

#endif
