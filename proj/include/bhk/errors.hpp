#pragma once

#include <stdexcept>
#include <string>

namespace bhk {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched matrix/vector/group dimensions.
class dimension_error : public error {
public:
    explicit dimension_error(const std::string& what) : error(what) {}
};

/// Rank-deficient input where full rank is required.
class rank_error : public error {
public:
    explicit rank_error(const std::string& what) : error(what) {}
};

/// Malformed polynomial, rational, or model-file input.
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

/// Enumeration refused because it would exceed the configured cap.
class cap_error : public error {
public:
    explicit cap_error(const std::string& what) : error(what) {}
};

/// Violated precondition (non-square matrix, singular matrix, rank != 1, ...).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

/// Internal consistency failure: a value that the construction rules out.
class invariant_error : public error {
public:
    explicit invariant_error(const std::string& what) : error(what) {}
};

} // namespace bhk
