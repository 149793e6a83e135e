#ifndef GAPSETS_ERRORS_HPP_
#define GAPSETS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gapsets {

  class GapsetError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A caller-checkable requirement of an operation was not met.
  class PreconditionError : public GapsetError {
   public:
    using GapsetError::GapsetError;
  };

  class UnsupportedDepthError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
  };

  // Requested genus (or element) exceeds what the configured ceiling allows.
  class ResourceLimitError : public GapsetError {
   public:
    using GapsetError::GapsetError;
  };

  // Raised when a construction that a proven statement guarantees to succeed
  // does not. Seeing one of these means a bug (or a false theorem).
  class TheoremViolation : public GapsetError {
   public:
    using GapsetError::GapsetError;
  };

  class CacheError : public GapsetError {
   public:
    enum class Kind { missing, corrupt };

    CacheError(Kind kind, std::string const& what)
        : GapsetError(what), _kind(kind) {}

    Kind kind() const noexcept {
      return _kind;
    }

   private:
    Kind _kind;
  };

}  // namespace gapsets

#endif  // GAPSETS_ERRORS_HPP_
