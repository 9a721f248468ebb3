#pragma once

#include <stdexcept>
#include <string>

namespace pbd {

/// Malformed input object: out-of-range ids, non-partition groups, bad file
/// syntax.  Distinct from an axiom failure, which is reported, not thrown.
class structural_error : public std::invalid_argument {
 public:
  explicit structural_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid argument to an operation (unsupported field order, empty K, ...).
class argument_error : public std::invalid_argument {
 public:
  explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A construction step could not be carried out on the given inputs
/// (pair blocks under truncation, missing ingredient, improper flat, ...).
class construction_error : public std::runtime_error {
 public:
  explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pbd
