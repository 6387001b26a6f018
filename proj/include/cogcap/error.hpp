#ifndef COGCAP_ERROR_HPP
#define COGCAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cogcap {

/// Invalid argument: out-of-domain value, malformed scenario, unknown id.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not deliver a result at the requested accuracy.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// The requested capacity-loss target cannot be reached by any p_s >= 0.
class InfeasibleTarget : public NumericalError {
public:
  InfeasibleTarget(const std::string& what, double floor)
      : NumericalError(what), floor_(floor) {}
  double floor() const noexcept { return floor_; }

private:
  double floor_;
};

/// Geometric bracket growth hit its cap without crossing the target.
class BracketFailure : public NumericalError {
public:
  using NumericalError::NumericalError;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail
}  // namespace cogcap

#endif
