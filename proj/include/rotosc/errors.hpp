#pragma once

#include <stdexcept>
#include <string>

namespace rotosc {

/// Failure of a numerical procedure (quadrature, conditioning, root isolation).
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// A verification check (intersection, lambda, Hellmann-Feynman) did not pass.
class verification_error : public std::runtime_error {
public:
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rotosc
