// SPDX-License-Identifier: Apache-2.0

#ifndef SWANSON_ERRORS_HPP
#define SWANSON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swanson
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Invalid model parameters (b0 <= 0, non-finite input, ...).
class InvalidParameters : public Error
{
public:
  using Error::Error;
};

// Operation not available in the region or boundary stratum of the parameter point.
class RegionError : public Error
{
public:
  using Error::Error;
};

// A closed form is singular at this parameter point (for example omega = 2 beta).
class SingularParameters : public Error
{
public:
  using Error::Error;
};

// An integral has no convergent quadrature strategy, or an iteration did not converge.
class NonConvergent : public Error
{
public:
  using Error::Error;
};

class PoleError : public Error
{
public:
  using Error::Error;
};

class DeltaDerivNotEvaluable : public Error
{
public:
  using Error::Error;
};

class OverflowError : public Error
{
public:
  using Error::Error;
};

}  // namespace swanson

#endif  // SWANSON_ERRORS_HPP
