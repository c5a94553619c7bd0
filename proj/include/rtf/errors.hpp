#ifndef RTF_ERRORS_HPP
#define RTF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rtf {

// Every failure mode of the numeric kernels maps onto one of these.
// The CLI translates them into its exit-code contract (3 = computation
// error); batch drivers catch them per grid point.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

struct RangeError : Error {
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

struct UnsupportedWeightError : Error {
    explicit UnsupportedWeightError(const std::string& msg) : Error(msg) {}
};

struct RegionError : Error {
    explicit RegionError(const std::string& msg) : Error(msg) {}
};

} // namespace rtf

#endif
