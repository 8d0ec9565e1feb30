#include "gt/export.hpp"

#include <sstream>

namespace gt {

std::string to_dot(const GtLattice& lat) {
  std::ostringstream out;
  out << "digraph gt_lattice {\n  rankdir=BT;\n";
  for (int v = 0; v < lat.size(); ++v)
    out << "  v" << v << " [label=\"" << lat.vertex(v).str() << "\"];\n";
  for (const Edge& e : lat.edges())
    out << "  v" << e.from << " -> v" << e.to << " [color=" << e.color << "];\n";
  out << "}\n";
  return out.str();
}

Json lattice_json(const GtLattice& lat) {
  Json doc;
  doc["shape"] = lat.shape().parts();
  doc["n"] = lat.n();
  doc["vertices"] = Json::array();
  for (int v = 0; v < lat.size(); ++v)
    doc["vertices"].push_back({{"id", v}, {"tableau", lat.vertex(v).str()}, {"m", lat.m_vector(v)}});
  doc["edges"] = Json::array();
  for (const Edge& e : lat.edges())
    doc["edges"].push_back({{"from", e.from}, {"to", e.to}, {"color", e.color}});
  return doc;
}

Json labeling_json(const GtLattice& lat, const EdgeLabeling& lab) {
  Json doc = lattice_json(lat);
  for (size_t e = 0; e < lat.edges().size(); ++e) {
    doc["edges"][e]["c"] = rat_str(lab.labels[e].c);
    doc["edges"][e]["d"] = rat_str(lab.labels[e].d);
    doc["edges"][e]["pi"] = rat_str(lab.labels[e].pi);
  }
  return doc;
}

Json report_json(const ConditionReport& report) {
  Json doc;
  doc["condition"] = report.condition;
  doc["pass"] = report.pass();
  doc["violations"] = Json::array();
  for (const Violation& v : report.violations)
    doc["violations"].push_back(
        {{"context", v.context}, {"expected", v.expected}, {"actual", v.actual}});
  return doc;
}

Json matrix_json(const SparseRationalMatrix& m) {
  Json doc;
  doc["dim"] = m.dim();
  doc["entries"] = Json::array();
  for (const auto& [pos, value] : m.entries())
    doc["entries"].push_back(Json::array({pos.first, pos.second, rat_str(value)}));
  return doc;
}

Json trace_json(const GtLattice& lat, const ProductAssignment& assignment) {
  Json doc = Json::array();
  for (size_t e = 0; e < lat.edges().size(); ++e) {
    if (!assignment.forced[e]) continue;
    const ForcedEdge& f = *assignment.forced[e];
    doc.push_back({{"edge", e},
                   {"pi", rat_str(f.pi)},
                   {"forced_by", f.by == ForcedEdge::By::kCrossing ? "crossing" : "diamond"},
                   {"witnesses", f.witnesses}});
  }
  return doc;
}

}  // namespace gt
