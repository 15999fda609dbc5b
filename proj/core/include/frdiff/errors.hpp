#pragma once

#include <stdexcept>
#include <string>

namespace frdiff {

// Parameter/domain violations. The CLI maps these to exit code 2.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A gamma factor was evaluated at one of its poles.
class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Numerical failures (non-convergence, overflow, lost significance).
// The CLI maps these to exit code 3.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class convergence_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

class overflow_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

}  // namespace frdiff
