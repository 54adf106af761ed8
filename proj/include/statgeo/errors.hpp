// statgeo - error types shared across the library

#ifndef STATGEO_ERRORS_HPP_
#define STATGEO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace statgeo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point (or an FD stencil around it) left the chart domain.
struct DomainError : Error {
  using Error::Error;
};

// Requested derivative order exceeds the policy.
struct OrderError : Error {
  using Error::Error;
};

// u below threshold or det g not positive.
struct SingularMetricError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

// Operation requires dtheta = 0 but the shift has curl.
struct NotStaticError : Error {
  using Error::Error;
};

// Twist one-form is not closed; potential undefined.
struct NotClosedError : Error {
  using Error::Error;
};

struct ParameterError : Error {
  using Error::Error;
};

struct ValenceError : Error {
  using Error::Error;
};

}  // namespace statgeo

#endif
