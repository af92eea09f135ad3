#ifndef BCKCODE_ERROR_HPP
#define BCKCODE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bck {

enum class ErrorKind {
  kInvalidArgument,   // malformed value handed to a constructor or operation
  kInadmissibleCode,  // code does not meet the construction's preconditions
  kDuplicateCodeword,
  kLengthMismatch,
  kOutOfRange,
  kSearchRefused,     // exhaustive search above its configured cap
  kNotBck,            // construction produced a table that fails the BCK axioms
  kParse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bck

#endif  // BCKCODE_ERROR_HPP
