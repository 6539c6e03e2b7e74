#pragma once

#include <stdexcept>
#include <string>

namespace gw {

/// Raised when an operation is called outside its mathematical domain
/// (negative binomial argument, delta >= d, a partition that is not a
/// sub-partition, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact computation produced something that cannot be a count, e.g. a
/// non-integral value from a rational closed form.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gw
