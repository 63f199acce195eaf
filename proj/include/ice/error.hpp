#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ice {

enum class ErrorCode {
    invalid_argument,
    degenerate_input,
    degenerate_fit,
    insufficient_data,
    needs_core_count,
    invalid_cache_geometry,
    undefined_ratio,
    trace_too_large,
    unknown_name,
    parse_error,
    division_by_zero,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace ice
