#pragma once

#include <string>

#include <json.hpp>

#include "gt/forcing.hpp"
#include "gt/labels.hpp"
#include "gt/repmat.hpp"
#include "gt/report.hpp"

namespace gt {

using Json = nlohmann::ordered_json;

// One node per vertex labeled with the tableau string, one directed edge per
// cover carrying its color; everything emitted in id order.
std::string to_dot(const GtLattice& lat);

Json lattice_json(const GtLattice& lat);
// lattice_json with the edge objects extended by "c", "d", "pi" strings.
Json labeling_json(const GtLattice& lat, const EdgeLabeling& lab);
Json report_json(const ConditionReport& report);
Json matrix_json(const SparseRationalMatrix& m);
Json trace_json(const GtLattice& lat, const ProductAssignment& assignment);

}  // namespace gt
