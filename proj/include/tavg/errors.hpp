#ifndef TAVG_ERRORS_HPP
#define TAVG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tavg {

/// Machine-checkable failure class carried by every tavg exception.
enum class ErrorCode {
    NonConvergence,
    UnsupportedComposition,
    EmptyPattern,
    ImproperTransform,
    WrongDomain,
    PoleOnPath,
    QuadratureFailure,
    UnstableSystem,
    PoleAtOne,
    PoleAtZero,
    PoleOnContour,
    ExtrapolationUnstable,
    UnderResolved,
    UnstableImpulseResponse,
    PreconditionViolation,
    SerializationError,
    ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace tavg

#endif
