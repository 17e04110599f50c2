#pragma once

/**
 * @file error.hpp
 * @brief Structured error type shared by every module.
 *
 * Every failure carries a machine-readable code whose name is what the CLI
 * prints, so callers can assert on error classes rather than message text.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace banal {

enum class Errc {
    UnknownLine,
    Registry,
    Syntax,
    Bounds,
    SegmentTooShort,
    NotBanal,
    NotConnected,
    MixedLines,
    Cycle,
    SupportMismatch,
    NotLinked,
    NotPreceding,
    NotAdjacentInversion,
    PatternMismatch,
    LineMismatch,
    MarginMismatch,
    SizeLimit,
    MoveLimit,
    Internal,
};

constexpr std::string_view name(Errc code) {
    switch (code) {
    case Errc::UnknownLine: return "UNKNOWN_LINE";
    case Errc::Registry: return "REGISTRY";
    case Errc::Syntax: return "SYNTAX";
    case Errc::Bounds: return "BOUNDS";
    case Errc::SegmentTooShort: return "SEGMENT_TOO_SHORT";
    case Errc::NotBanal: return "NOT_BANAL";
    case Errc::NotConnected: return "NOT_CONNECTED";
    case Errc::MixedLines: return "MIXED_LINES";
    case Errc::Cycle: return "CYCLE";
    case Errc::SupportMismatch: return "SUPPORT_MISMATCH";
    case Errc::NotLinked: return "NOT_LINKED";
    case Errc::NotPreceding: return "NOT_PRECEDING";
    case Errc::NotAdjacentInversion: return "NOT_ADJACENT_INVERSION";
    case Errc::PatternMismatch: return "PATTERN_MISMATCH";
    case Errc::LineMismatch: return "LINE_MISMATCH";
    case Errc::MarginMismatch: return "MARGIN_MISMATCH";
    case Errc::SizeLimit: return "SIZE_LIMIT";
    case Errc::MoveLimit: return "MOVE_LIMIT";
    case Errc::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace banal
