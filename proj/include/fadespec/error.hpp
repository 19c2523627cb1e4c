#pragma once

#include <stdexcept>
#include <string>

namespace fadespec {

// Iteration or convergence failure inside a numerical routine, as opposed to
// a caller-side argument violation (std::domain_error).
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fadespec
