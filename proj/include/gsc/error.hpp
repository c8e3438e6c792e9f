#ifndef GSC_ERROR_HPP
#define GSC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gsc {

/// Failure categories raised by the library. The CLI maps `usage` and
/// `not_found` to exit code 2 and everything else to exit code 1.
enum class ErrorKind {
  usage,
  not_found,
  parse,
  invalid_input,
  too_large,
  table_incomplete,
  not_virtual_character,
  group_mismatch,
  zero_pivot,
  negativity,
  unsupported,
  ambiguous,
  undefined_name,
  cyclic_definition,
  missing_intersection,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gsc

#endif  // GSC_ERROR_HPP
