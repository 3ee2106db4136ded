#ifndef KPZTAIL_ERRORS_HPP
#define KPZTAIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kpztail {

struct SpectrumOutOfRange : std::runtime_error {
    explicit SpectrumOutOfRange(const std::string& msg)
        : std::runtime_error("SpectrumOutOfRange: " + msg) {}
};

struct RangeExceeded : std::runtime_error {
    explicit RangeExceeded(const std::string& msg)
        : std::runtime_error("RangeExceeded: " + msg) {}
};

struct TruncationTooTight : std::runtime_error {
    explicit TruncationTooTight(const std::string& msg)
        : std::runtime_error("TruncationTooTight: " + msg) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& msg)
        : std::runtime_error("NoConvergence: " + msg) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg)
        : std::runtime_error("DomainError: " + msg) {}
};

struct DominanceNotEstablished : std::runtime_error {
    explicit DominanceNotEstablished(const std::string& msg)
        : std::runtime_error("DominanceNotEstablished: " + msg) {}
};

struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& msg)
        : std::runtime_error("QuadratureFailure: " + msg) {}
};

} // namespace kpztail

#endif
