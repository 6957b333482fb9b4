#pragma once

// Net files (JSON), SVG rendering and report export.

#include <filesystem>
#include <string>
#include <string_view>

#include "geonet/net.hpp"
#include "geonet/verify.hpp"

namespace geonet {

inline constexpr int kNetFormatVersion = 1;

/// Positions use the shortest decimal form that round-trips, so
/// net_from_json(net_to_json(n)) reproduces n bit for bit.
std::string net_to_json(const EmbeddedNet& net);
/// Throws Errc::parse_error (with line or field) and propagates
/// Errc::invariant_violation / degenerate_edge from net construction.
EmbeddedNet net_from_json(std::string_view text, std::string_view source = "<input>");

/// Throws Errc::io_error.
void save_net(const EmbeddedNet& net, const std::filesystem::path& path);
EmbeddedNet load_net(const std::filesystem::path& path);

/// Lengths are fractions of the bounding-box diagonal.
struct SvgStyle {
  double stroke_width = 0.002;
  double balanced_radius = 0.004;
  double boundary_radius = 0.009;
  double margin_fraction = 0.05;

  /// Throws Errc::invalid_argument unless every field is positive.
  void validate() const;
};

/// Deterministic SVG 1.1: y axis flipped, one line per edge, one circle per vertex.
std::string render_svg(const EmbeddedNet& net, const SvgStyle& style = {});
/// Throws Errc::io_error.
void export_svg(const EmbeddedNet& net, const std::filesystem::path& path, const SvgStyle& style = {});

enum class ReportFormat { csv, json };

/// One row per interior vertex: id,norm,vx,vy.
std::string render_report(const ImbalanceReport& report, ReportFormat format);
/// One row per finding: category,subject,detail,value,pass.
std::string render_report(const VerificationReport& report, ReportFormat format);

/// Throws Errc::io_error.
void export_report(const ImbalanceReport& report, const std::filesystem::path& path, ReportFormat format);
void export_report(const VerificationReport& report, const std::filesystem::path& path,
                   ReportFormat format);

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

/// Writes text to path, replacing any existing file. Throws Errc::io_error.
void write_text(const std::filesystem::path& path, std::string_view text);
/// Throws Errc::io_error.
std::string read_text(const std::filesystem::path& path);

}  // namespace geonet
