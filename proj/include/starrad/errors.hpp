#pragma once

#include <stdexcept>
#include <string>

namespace starrad {

/// Argument outside the domain of an operation (|z| >= 1, r >= 1, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Disc centre outside the interval where an inner-disc radius is known.
class range_error : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// zf'/f evaluated where f vanishes away from the origin.
class singularity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Winding integral too far from an integer to classify the point.
class near_boundary_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bisection called on an interval without a sign change.
class bracket_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sharpness check requested for a pair that carries no sharpness claim.
class claim_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace starrad
