#pragma once

#include <stdexcept>
#include <string>

namespace ncreal {

struct SizeMismatchError : std::runtime_error {
  explicit SizeMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyGeneratorsError : std::runtime_error {
  explicit EmptyGeneratorsError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomialError : std::runtime_error {
  explicit ZeroPolynomialError(const std::string& what) : std::runtime_error(what) {}
};

// Factor search beyond the configured degree cap.
struct DegreeCapExceededError : std::runtime_error {
  explicit DegreeCapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// A degree argument below the minimum the operation supports.
struct DegreeTooSmallError : std::runtime_error {
  explicit DegreeTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ncreal
