#pragma once

#include <stdexcept>
#include <string>

namespace shicone {

// Group enumeration (or path enumeration) hit its configured cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Required external data (e.g. an E6 digraph file) is not available.
struct MissingData : std::runtime_error {
    explicit MissingData(const std::string& what) : std::runtime_error(what) {}
};

// A verification run found a mismatch between independent computations.
struct VerificationFailure : std::runtime_error {
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

// File could not be read or written.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace shicone
