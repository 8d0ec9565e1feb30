#pragma once

#include <optional>

#include "gt/labels.hpp"
#include "gt/report.hpp"

namespace gt {

// How vertices are scheduled when forcing one color. Both schedules must
// produce identical assignments; the products are unique.
enum class ForcingMode {
  kRankSweep,      // all vertices globally by increasing rank
  kPerComponent,   // component at a time, minimal remaining member first
};

struct ForcedEdge {
  enum class By { kCrossing, kDiamond };
  Rat pi;
  By by = By::kCrossing;
  int anchor_vertex = -1;      // crossing: the vertex whose relation was used
  std::vector<int> witnesses;  // edge ids whose products fed the step
  int seq = -1;                // order of determination
};

// Partial map edge id -> forced product; entries are written exactly once.
struct ProductAssignment {
  std::vector<std::optional<ForcedEdge>> forced;

  bool total() const {
    for (const auto& f : forced)
      if (!f) return false;
    return true;
  }
};

// Color 1 components are chains; sweep each chain from its bottom, the
// crossing relation determining one product per step. Throws
// std::logic_error if some component is not a chain.
ProductAssignment force_color_one(const GtLattice& lat);

// Determine every color-k product assuming colors 1..k-1 are done. At each
// vertex, all upward k-edges but the one in the lowest decrementable row are
// each fixed by a diamond relation whose other three products are already
// known; the last one comes from the crossing relation at the vertex.
void force_color_k(const GtLattice& lat, ProductAssignment& assignment, int color,
                   ForcingMode mode);

ProductAssignment force_all(const GtLattice& lat, ForcingMode mode = ForcingMode::kRankSweep,
                            bool reverse_rank_ties = false);

// Exact edge-for-edge equality of the forced products against the formula
// labeling.
ConditionReport compare_forced_vs_formula(const GtLattice& lat, const EdgeLabeling& lab,
                                          const ProductAssignment& assignment);

}  // namespace gt
