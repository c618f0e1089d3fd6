#pragma once

#include <stdexcept>
#include <string>

namespace mathieu {

//! Thrown when a requested tolerance cannot be met within the term cap or
//! sits below the floating-point rounding floor for the given input.
class ToleranceUnreachable : public std::runtime_error {
  public:
    explicit ToleranceUnreachable(const std::string& what)
        : std::runtime_error(what) {}
};

//! Thrown when successive quadrature refinements disagree so badly that the
//! result cannot be trusted (disagreement > 1e6 * tol).
class QuadratureDivergence : public std::runtime_error {
  public:
    explicit QuadratureDivergence(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace mathieu
