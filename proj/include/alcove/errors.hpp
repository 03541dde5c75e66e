#pragma once

#include <stdexcept>

namespace alcove {

// Caller violated a documented precondition.
struct contract_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Unsupported configuration (bad family, even field order, ...).
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation invoked outside its range of applicability (s0 <= c_T).
struct applicability_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace alcove
