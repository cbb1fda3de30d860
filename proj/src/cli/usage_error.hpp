#pragma once

#include <stdexcept>

namespace mfising::cli {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mfising::cli
