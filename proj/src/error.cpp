#include "orbiform/error.hpp"

namespace orbiform {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::non_convex: return "non_convex";
    case ErrorKind::wrong_kind: return "wrong_kind";
    case ErrorKind::not_constant_width: return "not_constant_width";
    case ErrorKind::pole_irregular: return "pole_irregular";
    case ErrorKind::formula_misuse: return "formula_misuse";
    case ErrorKind::non_convergent: return "non_convergent";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace orbiform
