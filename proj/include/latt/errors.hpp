#ifndef LATT_ERRORS_HPP
#define LATT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPositiveDefinite : Error {
    using Error::Error;
};

// Raised when a search exhausts its node budget. The partial result is
// discarded; callers that need a three-valued answer catch this and report
// an Unknown outcome instead.
struct BudgetExceeded : Error {
    std::uint64_t nodes;
    explicit BudgetExceeded(std::uint64_t n)
        : Error("node budget exceeded after " + std::to_string(n) + " nodes"), nodes(n) {}
};

struct NotASquareRatio : Error {
    using Error::Error;
};
struct DependentBasis : Error {
    using Error::Error;
};
struct UnsupportedRank : Error {
    using Error::Error;
};
struct InvalidGlueIndex : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct NonIntegralGlue : Error {
    using Error::Error;
};
struct InvalidParameters : Error {
    using Error::Error;
};
struct UnknownName : Error {
    using Error::Error;
};
struct SizeExceeded : Error {
    using Error::Error;
};
struct NotUnimodular : Error {
    using Error::Error;
};
struct MinTooSmall : Error {
    using Error::Error;
};
struct UnknownG : Error {
    using Error::Error;
};
struct UnclassifiableComponent : Error {
    using Error::Error;
};
struct NotInRootSublattice : Error {
    using Error::Error;
};
struct UnknownClaim : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

} // namespace latt

#endif
