#include "selfind/error.hpp"

namespace selfind {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::parse: return "parse";
    case ErrorCode::degenerate_curve: return "degenerate-curve";
    case ErrorCode::unsupported_curve: return "unsupported-curve";
    case ErrorCode::separation: return "separation";
    case ErrorCode::proximity: return "proximity";
    case ErrorCode::domain: return "domain";
    case ErrorCode::divergent_domain: return "divergent-domain";
    case ErrorCode::fit: return "fit";
    case ErrorCode::counter_term_mismatch: return "counter-term-mismatch";
    case ErrorCode::extrapolation: return "extrapolation";
    case ErrorCode::locality: return "locality";
    case ErrorCode::tolerance: return "tolerance";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace selfind
