#ifndef VACT_ERROR_HPP
#define VACT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vact {

/// Raised when an input violates an operation's precondition (bad label,
/// dependent set, malformed file, ...). The CLI maps it to exit code 1.
class InvalidInput : public std::invalid_argument {
public:
  explicit InvalidInput(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace vact

#endif // VACT_ERROR_HPP
