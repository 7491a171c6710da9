#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace baumkuchen {

enum class ErrorCode {
    invalid_argument,
    outside_circle,
    off_boundary,
    numeric,
    invalid_cuts,
    point_outside_inner_disk,
    radii_order,
    not_boundary_case,
    degenerate_decomposition,
    convergence,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for failures caused by floating-point breakdown rather than bad input.
constexpr bool is_numeric_failure(ErrorCode code) noexcept
{
    return code == ErrorCode::numeric || code == ErrorCode::convergence;
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace baumkuchen
