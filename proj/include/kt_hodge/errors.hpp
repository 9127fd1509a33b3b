#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kt_hodge {

enum class ErrorKind {
    ZeroParameter,
    NonPositiveRho,
    UnsupportedDenominator,
    UnreachableTarget,
    DegenerateSpectrum,
    IrrationalScale,
    NonFinite,
    SingularStep,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::NonPositiveRho: return "NonPositiveRho";
    case ErrorKind::UnsupportedDenominator: return "UnsupportedDenominator";
    case ErrorKind::UnreachableTarget: return "UnreachableTarget";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::IrrationalScale: return "IrrationalScale";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::SingularStep: return "SingularStep";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& reason)
        : std::runtime_error(reason), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace kt_hodge
