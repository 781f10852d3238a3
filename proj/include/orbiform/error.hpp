#pragma once

#include <stdexcept>
#include <string>

namespace orbiform {

enum class ErrorKind {
  invalid_argument,
  non_convex,
  wrong_kind,
  not_constant_width,
  pole_irregular,
  formula_misuse,
  non_convergent,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure the library reports on purpose is a GeometryError. `detail`
// carries an optional number (e.g. the minimum admissible width).
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& message, double detail = 0.0)
      : std::runtime_error(message), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  double detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  double detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message, double detail = 0.0) {
  throw GeometryError(kind, message, detail);
}

}  // namespace orbiform
