#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geonet {

enum class Errc {
  degenerate_edge,
  no_fermat_point,
  parallel_lines,
  id_mismatch,
  degenerate_configuration,
  unknown_vertex,
  domain_error,
  bracket_failure,
  singular_denominator,
  closure_failure,
  unsupported_family,
  degenerated,
  no_trace,
  search_budget_exceeded,
  parse_error,
  invariant_violation,
  io_error,
  invalid_argument,
};

std::string_view to_string(Errc code) noexcept;

/// All library failures are reported as geonet::Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace geonet
