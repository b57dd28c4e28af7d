#pragma once

#include <stdexcept>
#include <string>

namespace klcx {

// Invalid input domain: wrong root-system type, element outside W+, rank too small.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A query needs data beyond the length bound the tables were built with.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured cap (element count, DP box volume) would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace klcx
