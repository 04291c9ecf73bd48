#pragma once

#include <stdexcept>
#include <string>

namespace partdist {

/// Malformed input: overlapping or missing elements, empty blocks, bad literals.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two partitions over ground sets of different cardinality.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive work requested above the configured enumeration limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Argument outside the documented domain (k out of range, bad class vector...).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace partdist
