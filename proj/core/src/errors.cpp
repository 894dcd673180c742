#include "evenfix/errors.hpp"

namespace evenfix {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::tolerance: return "tolerance";
    case ErrorKind::not_closed: return "not_closed";
    case ErrorKind::structural: return "structural";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

}  // namespace evenfix
