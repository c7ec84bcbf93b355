#ifndef LEFSURF_UTIL_HPP
#define LEFSURF_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lefsurf {

// Machine-readable error codes; every thrown domain error carries one.
enum class ErrorCode {
    DivisionByZero,
    NotASquare,
    PrecisionExhausted,
    PointNotOnSurface,
    PointNotOnCurve,
    Unsupported,
    NotLefschetz,
    BadPrime,
    DegenerateDivisorSupport,
    NotNodal,
    NotSquarefree,
    OutsideRadius,
    Ambiguous,
    NoRamifiedSheet,
    ProductNotTransvection,
    PathBlocked,
    ComplexNotExact,
    BudgetExceeded,
    BadReduction,
    NoIntegerFit,
    BoundTooSmall,
    Inconsistent,
    UsageError,
    InternalError,
};

inline const char* error_code_name(ErrorCode c)
{
    switch (c) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotASquare: return "NotASquare";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::PointNotOnSurface: return "PointNotOnSurface";
        case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::NotLefschetz: return "NotLefschetz";
        case ErrorCode::BadPrime: return "BadPrime";
        case ErrorCode::DegenerateDivisorSupport: return "DegenerateDivisorSupport";
        case ErrorCode::NotNodal: return "NotNodal";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::OutsideRadius: return "OutsideRadius";
        case ErrorCode::Ambiguous: return "Ambiguous";
        case ErrorCode::NoRamifiedSheet: return "NoRamifiedSheet";
        case ErrorCode::ProductNotTransvection: return "ProductNotTransvection";
        case ErrorCode::PathBlocked: return "PathBlocked";
        case ErrorCode::ComplexNotExact: return "ComplexNotExact";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::BadReduction: return "BadReduction";
        case ErrorCode::NoIntegerFit: return "NoIntegerFit";
        case ErrorCode::BoundTooSmall: return "BoundTooSmall";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::UsageError: return "UsageError";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

// Deterministic 64-bit generator (splitmix64).  All randomness in the
// library flows from one config seed through instances of this.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n)
    {
        std::uint64_t lim = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= lim);
        return v % n;
    }

    // Signed uniform in [-m, m].
    std::int64_t centered(std::uint64_t m)
    {
        return static_cast<std::int64_t>(below(2 * m + 1)) - static_cast<std::int64_t>(m);
    }

    // Independent child stream; distinct labels give distinct streams.
    Rng fork(std::uint64_t label)
    {
        Rng child(state_ ^ (0x517cc1b727220a95ULL * (label + 1)));
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

// Run-wide knobs.  Immutable after construction; passed by const ref.
struct Config {
    std::uint64_t seed = 0;
    long precision_cap_bits = 1L << 20;
    std::int64_t counting_budget = 100000000; // point evaluations
    int workers = 0;                          // 0 = hardware default
    bool json = false;
};

} // namespace lefsurf

#endif
