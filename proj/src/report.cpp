#include <json.hpp>

#include "geonet/io.hpp"

namespace geonet {

using json = nlohmann::json;

namespace {

std::string_view kind_name(OverlapFinding::Kind k) {
  switch (k) {
    case OverlapFinding::Kind::coincident_edges: return "coincident_edges";
    case OverlapFinding::Kind::collinear_overlap: return "collinear_overlap";
    case OverlapFinding::Kind::close_vertices: return "close_vertices";
  }
  return "unknown";
}

std::string edge_label(const Edge& e) { return e.a + "-" + e.b; }

// Fields never contain commas or quotes except free text, which gets quoted.
std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Row {
  std::string category;
  std::string subject;
  std::string detail;
  std::string value;
  bool pass;
};

std::vector<Row> finding_rows(const VerificationReport& r) {
  std::vector<Row> rows;
  for (const VertexNorm& u : r.unbalanced) rows.push_back({"imbalance", u.id, "", format_double(u.norm), false});
  for (const OverlapFinding& f : r.overlaps) {
    rows.push_back({"overlap", edge_label(f.first) + " " + edge_label(f.second), std::string(kind_name(f.kind)),
                    format_double(f.measure), false});
  }
  for (const std::string& id : r.low_degree) rows.push_back({"degree", id, "interior degree below 3", "", false});
  for (const LemmaCheck& c : r.lemma_checks) {
    rows.push_back({"lemma", c.name, "", format_double(c.max_deviation), c.pass});
  }
  if (r.irreducible != Irreducibility::not_checked) {
    std::string detail;
    if (r.witness) {
      for (const Edge& e : r.witness->edges) detail += (detail.empty() ? "" : " ") + edge_label(e);
    }
    rows.push_back({"irreducibility", std::string(to_string(r.irreducible)), detail, "",
                    r.irreducible == Irreducibility::yes});
  }
  return rows;
}

}  // namespace

std::string render_report(const ImbalanceReport& report, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::string out = "id,norm,vx,vy\n";
    for (const auto& [id, imb] : report.per_vertex) {
      out += csv_field(id) + "," + format_double(imb.norm) + "," + format_double(imb.vector.x) + "," +
             format_double(imb.vector.y) + "\n";
    }
    return out;
  }
  json doc;
  doc["total_loss"] = report.total_loss;
  doc["max_norm"] = report.max_norm;
  doc["vertices"] = json::array();
  for (const auto& [id, imb] : report.per_vertex) {
    doc["vertices"].push_back({{"id", id}, {"norm", imb.norm}, {"vx", imb.vector.x}, {"vy", imb.vector.y}});
  }
  return doc.dump(2) + "\n";
}

std::string render_report(const VerificationReport& report, ReportFormat format) {
  const auto rows = finding_rows(report);
  if (format == ReportFormat::csv) {
    std::string out = "category,subject,detail,value,pass\n";
    for (const Row& r : rows) {
      out += csv_field(r.category) + "," + csv_field(r.subject) + "," + csv_field(r.detail) + "," + r.value + "," +
             (r.pass ? "true" : "false") + "\n";
    }
    return out;
  }
  json doc;
  doc["passed"] = report.passed();
  doc["balance_pass"] = report.balance_pass;
  doc["overlap_pass"] = report.overlap_pass;
  doc["degree_pass"] = report.degree_pass;
  doc["irreducible"] = std::string(to_string(report.irreducible));
  doc["findings"] = json::array();
  for (const Row& r : rows) {
    doc["findings"].push_back(
        {{"category", r.category}, {"subject", r.subject}, {"detail", r.detail}, {"value", r.value}, {"pass", r.pass}});
  }
  return doc.dump(2) + "\n";
}

void export_report(const ImbalanceReport& report, const std::filesystem::path& path, ReportFormat format) {
  write_text(path, render_report(report, format));
}

void export_report(const VerificationReport& report, const std::filesystem::path& path, ReportFormat format) {
  write_text(path, render_report(report, format));
}

}  // namespace geonet
