#pragma once

#include <stdexcept>
#include <string>

namespace skew46 {

enum class ErrorCode {
    ZeroTriple,
    NegativeCoordinate,
    CollinearInputs,
    ChartDomain,
    DegenerateChart,
    DomainViolation,
    InsufficientPoints,
    PrefixIncomplete,
    InvalidDirection,
    DepthCapExceeded,
    NonTransverse,
    Io,
};

struct Error : std::runtime_error {
    ErrorCode code;
    Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

} // namespace skew46
