#pragma once

#include <stdexcept>
#include <string>

namespace superres {

/// Invalid input: bad parameters, malformed text, operation outside its domain.
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Data disagrees with itself (e.g. lower/upper dimension sequences detect
/// different growth degrees). Signals a table or transcription problem.
struct inconsistency_error : std::runtime_error {
    explicit inconsistency_error(const std::string& what) : std::runtime_error(what) {}
};

/// A violated internal invariant. Never expected; flags a logic bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace superres
