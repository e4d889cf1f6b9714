#pragma once

#include <stdexcept>
#include <string>

namespace mnseq {

enum class ErrorCode {
    malformed_token,
    not_double_occurrence,
    not_four_valent,
    vertex_not_on_path,
    multi_component,
    composite_token,
    parse_error,
    budget_exceeded,
    usage,
};

/// Library-wide exception. The code distinguishes input errors from
/// contract violations so the CLI can map them to exit statuses.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace mnseq
