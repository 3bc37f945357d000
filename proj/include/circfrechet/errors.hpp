#pragma once

#include <stdexcept>
#include <string>

namespace circfr {

// Base for all module errors. `name()` is the stable identifier printed by
// the CLI on stderr; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& d) : Error("domain error", d) {}
};

struct IntegrabilityError : Error {
  explicit IntegrabilityError(const std::string& d) : Error("integrability error", d) {}
};

struct EmptySampleError : Error {
  explicit EmptySampleError(const std::string& d) : Error("empty-sample error", d) {}
};

struct EmptyWindowError : Error {
  explicit EmptyWindowError(const std::string& d) : Error("empty-window error", d) {}
};

struct SingularDesignError : Error {
  explicit SingularDesignError(const std::string& d) : Error("singular-design error", d) {}
};

struct DegenerateWeightsError : Error {
  explicit DegenerateWeightsError(const std::string& d) : Error("degenerate-weights error", d) {}
};

struct DegenerateCurvatureError : Error {
  explicit DegenerateCurvatureError(const std::string& d) : Error("degenerate-curvature error", d) {}
};

struct UnsupportedModelError : Error {
  explicit UnsupportedModelError(const std::string& d) : Error("unsupported-model error", d) {}
};

struct InvalidPointError : Error {
  explicit InvalidPointError(const std::string& d) : Error("invalid-point error", d) {}
};

struct TypeError : Error {
  explicit TypeError(const std::string& d) : Error("type error", d) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& d) : Error("parse error", d) {}
};

struct NoValidBandwidthError : Error {
  explicit NoValidBandwidthError(const std::string& d) : Error("no-valid-bandwidth error", d) {}
};

struct ExperimentInvalidError : Error {
  explicit ExperimentInvalidError(const std::string& d) : Error("experiment-invalid error", d) {}
};

}  // namespace circfr
