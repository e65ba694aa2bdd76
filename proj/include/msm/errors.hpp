#pragma once

#include <stdexcept>
#include <string>

namespace msm {

// Input failed structural validation (bad JSON field, malformed matrix,
// ground-space mismatch, ...). The message names the offending field or value.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An operation would exceed the configured solver size cap.
class SizeCapError : public std::runtime_error {
public:
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace msm
