#include "ice/error.hpp"

namespace ice {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid-argument";
        case ErrorCode::degenerate_input: return "degenerate-input";
        case ErrorCode::degenerate_fit: return "degenerate-fit";
        case ErrorCode::insufficient_data: return "insufficient-data";
        case ErrorCode::needs_core_count: return "needs-core-count";
        case ErrorCode::invalid_cache_geometry: return "invalid-cache-geometry";
        case ErrorCode::undefined_ratio: return "undefined-ratio";
        case ErrorCode::trace_too_large: return "trace-too-large";
        case ErrorCode::unknown_name: return "unknown-name";
        case ErrorCode::parse_error: return "parse-error";
        case ErrorCode::division_by_zero: return "division-by-zero";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace ice
