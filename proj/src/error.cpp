#include "geonet/error.hpp"

namespace geonet {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::degenerate_edge: return "DegenerateEdge";
    case Errc::no_fermat_point: return "NoFermatPoint";
    case Errc::parallel_lines: return "ParallelLines";
    case Errc::id_mismatch: return "IdMismatch";
    case Errc::degenerate_configuration: return "DegenerateConfiguration";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::domain_error: return "DomainError";
    case Errc::bracket_failure: return "BracketFailure";
    case Errc::singular_denominator: return "SingularDenominator";
    case Errc::closure_failure: return "ClosureFailure";
    case Errc::unsupported_family: return "UnsupportedFamily";
    case Errc::degenerated: return "Degenerated";
    case Errc::no_trace: return "NoTrace";
    case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case Errc::parse_error: return "ParseError";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::io_error: return "IoError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace geonet
