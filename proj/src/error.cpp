#include "sparsesum/error.hpp"

namespace sparsesum {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidPanel: return "invalid panel";
    case ErrorKind::InvalidSequence: return "invalid node sequence";
    case ErrorKind::InvalidCount: return "invalid count";
    case ErrorKind::InvalidRatio: return "invalid ratio";
    case ErrorKind::InvalidCutoff: return "invalid cutoff";
    case ErrorKind::InvalidPartition: return "invalid partition";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::CostGuard: return "cost guard";
    case ErrorKind::SingularParameter: return "singular parameter";
    case ErrorKind::DivergentSeries: return "divergent series";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::BudgetExhausted: return "node budget exhausted";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

}  // namespace sparsesum
