#include "gt/forcing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gt {

namespace {

int leftmost_col(const Tableau& t, int row, int value) {
  for (int j = 1; j <= t.row_length(row); ++j)
    if (t.at(row, j) == value) return j;
  return -1;
}

Tableau incremented(const Tableau& t, int value, int row) {
  auto rows = t.rows();
  for (int j = static_cast<int>(rows[row - 1].size()) - 1; j >= 0; --j)
    if (rows[row - 1][j] == value) {
      rows[row - 1][j] = value + 1;
      break;
    }
  return Tableau(std::move(rows), t.n());
}

Tableau decremented(const Tableau& t, int color, int row) {
  auto rows = t.rows();
  for (auto& cell : rows[row - 1])
    if (cell == color + 1) {
      cell = color;
      break;
    }
  return Tableau(std::move(rows), t.n());
}

void assign(ProductAssignment& assignment, int edge, ForcedEdge value, int& seq) {
  if (assignment.forced[edge])
    throw std::logic_error("edge product determined twice");
  value.seq = seq++;
  assignment.forced[edge] = std::move(value);
}

struct DiamondStep {
  int edge;                    // the upward k-edge being determined
  int e_low_in, e_low_up, e_up_in;  // partner edges: into the diamond bottom's
                                    // neighbors; see process_vertex
};

// Plan the forcing work at one vertex for one color: a diamond step for each
// upward k-edge except the one in the lowest decrementable row, then the
// crossing relation for that last edge. Returns false when some required
// product is not yet known.
bool plan_vertex(const GtLattice& lat, const ProductAssignment& assignment, int color, int v,
                 std::vector<DiamondStep>& steps, int& last_edge) {
  steps.clear();
  last_edge = -1;
  std::vector<std::pair<int, int>> ups;  // (row, edge id)
  for (int e : lat.up_edges(v))
    if (lat.edges()[e].color == color) ups.push_back({lat.edges()[e].row, e});
  if (ups.empty()) return true;
  std::sort(ups.begin(), ups.end());

  for (int e : lat.down_edges(v))
    if (lat.edges()[e].color == color && !assignment.forced[e]) return false;

  const Tableau& tab = lat.vertex(v);
  for (size_t j = 0; j + 1 < ups.size(); ++j) {
    int row = ups[j].first;
    int next_row = ups[j + 1].first;
    // the entry sitting above the leftmost color+1 in the next decrementable
    // row can be raised in the row above it, forming a diamond with the edge
    // we want
    int col = leftmost_col(tab, next_row, color + 1);
    int small = tab.at(next_row - 1, col);
    Tableau low = incremented(tab, small, next_row - 1);
    int low_id = lat.vertex_id(low);
    if (low_id < 0) throw std::logic_error("diamond partner vertex missing");
    int e_low_in = lat.edge_between(low_id, v);
    Tableau low_up = decremented(low, color, row);
    int low_up_id = lat.vertex_id(low_up);
    if (low_up_id < 0) throw std::logic_error("diamond partner vertex missing");
    int e_low_up = lat.edge_between(low_id, low_up_id);
    int e_up_in = lat.edge_between(low_up_id, lat.edges()[ups[j].second].to);
    if (e_low_in < 0 || e_low_up < 0 || e_up_in < 0)
      throw std::logic_error("diamond edge missing");
    if (lat.edges()[e_low_in].color != small || lat.edges()[e_up_in].color != small ||
        lat.edges()[e_low_up].color != color)
      throw std::logic_error("diamond edge has unexpected color");
    if (!assignment.forced[e_low_in] || !assignment.forced[e_low_up] ||
        !assignment.forced[e_up_in])
      return false;
    steps.push_back({ups[j].second, e_low_in, e_low_up, e_up_in});
  }
  last_edge = ups.back().second;
  return true;
}

void process_vertex(const GtLattice& lat, ProductAssignment& assignment, int color, int v,
                    const std::vector<DiamondStep>& steps, int last_edge, int& seq) {
  for (const DiamondStep& step : steps) {
    const Rat& pi_low_in = assignment.forced[step.e_low_in]->pi;
    const Rat& pi_low_up = assignment.forced[step.e_low_up]->pi;
    const Rat& pi_up_in = assignment.forced[step.e_up_in]->pi;
    if (pi_up_in == 0) throw std::logic_error("diamond relation requires a nonzero product");
    ForcedEdge forced;
    forced.pi = pi_low_in * pi_low_up / pi_up_in;
    forced.pi.canonicalize();
    forced.by = ForcedEdge::By::kDiamond;
    forced.witnesses = {step.e_low_in, step.e_low_up, step.e_up_in};
    assign(assignment, step.edge, std::move(forced), seq);
  }
  if (last_edge < 0) return;

  Rat balance(0);
  std::vector<int> witnesses;
  for (int e : lat.down_edges(v))
    if (lat.edges()[e].color == color) {
      balance += assignment.forced[e]->pi;
      witnesses.push_back(e);
    }
  for (int e : lat.up_edges(v))
    if (lat.edges()[e].color == color && e != last_edge) {
      balance -= assignment.forced[e]->pi;
      witnesses.push_back(e);
    }
  ForcedEdge forced;
  forced.pi = balance - lat.m(v, color);
  forced.pi.canonicalize();
  forced.by = ForcedEdge::By::kCrossing;
  forced.anchor_vertex = v;
  forced.witnesses = std::move(witnesses);
  assign(assignment, last_edge, std::move(forced), seq);
}

void force_color_rank_sweep(const GtLattice& lat, ProductAssignment& assignment, int color,
                            bool reverse_rank_ties, int& seq) {
  std::vector<int> order(lat.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (lat.rank(a) != lat.rank(b)) return lat.rank(a) < lat.rank(b);
    return reverse_rank_ties ? a > b : a < b;
  });
  std::vector<DiamondStep> steps;
  int last_edge = -1;
  for (int v : order) {
    if (!plan_vertex(lat, assignment, color, v, steps, last_edge))
      throw std::logic_error("underdetermined: required product missing in rank sweep");
    process_vertex(lat, assignment, color, v, steps, last_edge, seq);
  }
}

void force_color_per_component(const GtLattice& lat, ProductAssignment& assignment, int color,
                               int& seq) {
  const auto& comps = lat.components(color);
  std::vector<char> done(lat.size(), 0);
  int remaining = lat.size();
  std::vector<DiamondStep> steps;
  int last_edge = -1;
  while (remaining > 0) {
    bool progressed = false;
    // component order starts at the top of the lattice, so cross-component
    // diamond dependencies are routinely not ready yet; such vertices stay
    // in the pool for a later round
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
      bool advanced = true;
      while (advanced) {
        advanced = false;
        for (auto it = comps[ci].members.rbegin(); it != comps[ci].members.rend(); ++it) {
          int v = *it;
          if (done[v]) continue;
          bool minimal = true;
          for (int e : lat.down_edges(v))
            if (lat.edges()[e].color == color && !done[lat.edges()[e].from]) minimal = false;
          if (!minimal) continue;
          if (!plan_vertex(lat, assignment, color, v, steps, last_edge)) continue;
          process_vertex(lat, assignment, color, v, steps, last_edge, seq);
          done[v] = 1;
          --remaining;
          advanced = true;
          progressed = true;
        }
      }
    }
    if (!progressed) throw std::logic_error("underdetermined: no component member processable");
  }
}

}  // namespace

ProductAssignment force_color_one(const GtLattice& lat) {
  ProductAssignment assignment;
  assignment.forced.resize(lat.edges().size());
  if (lat.num_colors() < 1) return assignment;

  int seq = 0;
  for (const ComponentInfo& comp : lat.components(1)) {
    std::vector<std::pair<int, int>> by_rank;  // (rank, vertex)
    for (int v : comp.members) {
      int ups = 0, downs = 0;
      for (int e : lat.up_edges(v)) ups += lat.edges()[e].color == 1;
      for (int e : lat.down_edges(v)) downs += lat.edges()[e].color == 1;
      if (ups > 1 || downs > 1) throw std::logic_error("1-component is not a chain");
      by_rank.push_back({lat.rank(v), v});
    }
    std::sort(by_rank.begin(), by_rank.end());
    // walk the chain upward; the crossing relation at each vertex determines
    // the product of its unique upward edge
    Rat below(0);
    int below_edge = -1;
    for (size_t idx = 0; idx < by_rank.size(); ++idx) {
      int v = by_rank[idx].second;
      int up_edge = -1;
      for (int e : lat.up_edges(v))
        if (lat.edges()[e].color == 1) up_edge = e;
      if (up_edge < 0) {
        if (below != lat.m(v, 1))
          throw std::logic_error("chain top fails its crossing relation");
        break;
      }
      ForcedEdge forced;
      forced.pi = below - lat.m(v, 1);
      forced.pi.canonicalize();
      forced.by = ForcedEdge::By::kCrossing;
      forced.anchor_vertex = v;
      if (below_edge >= 0) forced.witnesses = {below_edge};
      assign(assignment, up_edge, std::move(forced), seq);
      below = assignment.forced[up_edge]->pi;
      below_edge = up_edge;
    }
  }
  return assignment;
}

void force_color_k(const GtLattice& lat, ProductAssignment& assignment, int color,
                   ForcingMode mode) {
  int seq = 0;
  for (const auto& f : assignment.forced)
    if (f) seq = std::max(seq, f->seq + 1);
  if (mode == ForcingMode::kRankSweep)
    force_color_rank_sweep(lat, assignment, color, false, seq);
  else
    force_color_per_component(lat, assignment, color, seq);
}

ProductAssignment force_all(const GtLattice& lat, ForcingMode mode, bool reverse_rank_ties) {
  ProductAssignment assignment = force_color_one(lat);
  int seq = 0;
  for (const auto& f : assignment.forced)
    if (f) seq = std::max(seq, f->seq + 1);
  for (int color = 2; color <= lat.num_colors(); ++color) {
    if (mode == ForcingMode::kRankSweep)
      force_color_rank_sweep(lat, assignment, color, reverse_rank_ties, seq);
    else
      force_color_per_component(lat, assignment, color, seq);
  }
  if (!assignment.total()) throw std::logic_error("forcing left an edge undetermined");
  return assignment;
}

ConditionReport compare_forced_vs_formula(const GtLattice& lat, const EdgeLabeling& lab,
                                          const ProductAssignment& assignment) {
  ConditionReport report{"forced-vs-formula", {}};
  for (size_t e = 0; e < lat.edges().size(); ++e) {
    if (!assignment.forced[e]) {
      report.add("edge " + std::to_string(e), rat_str(lab.labels[e].pi), "undetermined");
      continue;
    }
    if (assignment.forced[e]->pi != lab.labels[e].pi)
      report.add("edge " + std::to_string(e) + " (" + lat.vertex(lat.edges()[e].from).str() +
                     " -> " + lat.vertex(lat.edges()[e].to).str() + ", color " +
                     std::to_string(lat.edges()[e].color) + ")",
                 rat_str(lab.labels[e].pi), rat_str(assignment.forced[e]->pi));
  }
  return report;
}

}  // namespace gt
