#pragma once

#include <map>
#include <string>
#include <vector>

#include "gt/tableaux.hpp"

namespace gt {

// Covering relation from -> to of the lattice: `to` is obtained from `from`
// by changing the leftmost entry (color+1) in `row` into color. Entries get
// smaller going up; the maximum is the tableau with row i filled with i.
struct Edge {
  int from = -1;  // lower endpoint
  int to = -1;    // upper endpoint
  int color = 0;  // 1..n-1
  int row = 0;    // 1-based row of the changed cell
};

// One connected component of the color-k subgraph. rho runs 0..length over
// the members; m = 2*rho - length.
struct ComponentInfo {
  int color = 0;
  std::vector<int> members;  // vertex ids, ascending
  std::vector<int> rho;      // parallel to members
  int length = 0;
};

class GtLattice {
 public:
  GtLattice(Partition shape, int n);

  const Partition& shape() const { return shape_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(verts_.size()); }
  int num_colors() const { return n_ - 1; }

  const Tableau& vertex(int id) const { return verts_[id]; }
  int vertex_id(const Tableau& t) const;  // -1 when absent

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& up_edges(int id) const { return up_[id]; }    // edge indices, id = from
  const std::vector<int>& down_edges(int id) const { return down_[id]; }  // edge indices, id = to
  int edge_between(int from, int to) const;  // -1 when absent

  int rank(int id) const { return rank_[id]; }
  int min_id() const { return min_id_; }
  int max_id() const { return max_id_; }

  // m_k(v) = 2*rho_k(v) - l_k(v) from the color-k component containing v.
  int m(int id, int color) const { return m_[id][color - 1]; }
  const std::vector<int>& m_vector(int id) const { return m_[id]; }
  // Weight in the epsilon coordinates: the content vector of the tableau.
  const std::vector<int>& weight(int id) const { return mu_[id]; }

  const std::vector<ComponentInfo>& components(int color) const {
    return comps_.at(color - 1);
  }
  int component_of(int id, int color) const { return comp_of_.at(color - 1)[id]; }

  // Copy with one edge's color replaced, adjacency rebuilt but component/m
  // data kept from the clean lattice. Exists for fault-injection experiments.
  GtLattice recolored(int edge_id, int new_color) const;

 private:
  GtLattice() = default;
  void rebuild_adjacency();

  Partition shape_;
  int n_ = 0;
  std::vector<Tableau> verts_;
  std::map<std::vector<int>, int> word_to_id_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> rank_;
  int min_id_ = -1, max_id_ = -1;
  std::vector<std::vector<int>> m_, mu_;
  std::vector<std::vector<ComponentInfo>> comps_;   // [color-1]
  std::vector<std::vector<int>> comp_of_;           // [color-1][vertex]
};

// Rows whose leftmost (color+1) may be replaced by color, the result still
// a valid tableau. Ascending, at most `color` of them.
std::vector<int> decrementable_rows(const Tableau& t, int color);

// Rows whose rightmost `value` may be replaced by value+1. Ascending.
std::vector<int> incrementable_rows(const Tableau& t, int value);

GtLattice build_lattice(const Partition& shape, int n);

}  // namespace gt
