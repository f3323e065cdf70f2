#ifndef POLYDIST_ERRORS_HPP
#define POLYDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polydist {

// Process exit codes reused by the CLI; library errors carry the code they
// map to so the front end stays a thin translation layer.
enum class ErrorCode : int {
  InvalidNorm = 2,
  Sampling = 3,
  Budget = 4,
  Io = 5,
  Schedule = 6,
  Internal = 1,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct DuplicateSlope : Error {
  explicit DuplicateSlope(const std::string& w)
      : Error(ErrorCode::InvalidNorm, w) {}
};
struct DegenerateBall : Error {
  explicit DegenerateBall(const std::string& w)
      : Error(ErrorCode::InvalidNorm, w) {}
};
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& w)
      : Error(ErrorCode::Internal, w) {}
};
struct ParameterCollision : Error {
  explicit ParameterCollision(const std::string& w)
      : Error(ErrorCode::Sampling, w) {}
};
struct RepresentationCollision : Error {
  explicit RepresentationCollision(const std::string& w)
      : Error(ErrorCode::Sampling, w) {}
};
struct MembershipViolation : Error {
  explicit MembershipViolation(const std::string& w)
      : Error(ErrorCode::Sampling, w) {}
};
struct ExhaustedTries : Error {
  explicit ExhaustedTries(const std::string& w)
      : Error(ErrorCode::Sampling, w) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& w)
      : Error(ErrorCode::Budget, w) {}
};
struct ScheduleInfeasible : Error {
  explicit ScheduleInfeasible(const std::string& w)
      : Error(ErrorCode::Schedule, w) {}
};
struct NonMonotone : Error {
  explicit NonMonotone(const std::string& w)
      : Error(ErrorCode::Schedule, w) {}
};
struct NotMaterialized : Error {
  explicit NotMaterialized(const std::string& w)
      : Error(ErrorCode::Internal, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::Io, w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w)
      : Error(ErrorCode::InvalidNorm, w) {}
};

}  // namespace polydist

#endif
