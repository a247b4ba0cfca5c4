#pragma once

#include <stdexcept>
#include <string>

namespace rep12 {

// Malformed user-facing input: files, words, labelings, models.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vertex ordering admits no geometric model because the endpoint
// constraint digraph is cyclic.  Equivalent to the ordering containing a
// forbidden pattern; callers that searched for the ordering themselves
// treat this as a hard error.
class OrderingNotPatternFree : public std::runtime_error {
 public:
  OrderingNotPatternFree() : std::runtime_error("ordering not pattern-free") {}
};

}  // namespace rep12
