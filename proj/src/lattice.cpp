#include "gt/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gt {

std::vector<int> decrementable_rows(const Tableau& t, int color) {
  std::vector<int> rows;
  int target = color + 1;
  for (int r = 1; r <= t.num_rows(); ++r) {
    int c = 0;
    for (int j = 1; j <= t.row_length(r); ++j)
      if (t.at(r, j) == target) {
        c = j;
        break;
      }
    if (c == 0) continue;
    // the cell above must stay strictly smaller after the change
    if (r > 1 && t.at(r - 1, c) >= color) continue;
    rows.push_back(r);
  }
  return rows;
}

std::vector<int> incrementable_rows(const Tableau& t, int value) {
  std::vector<int> rows;
  if (value + 1 > t.n()) return rows;
  for (int r = 1; r <= t.num_rows(); ++r) {
    int c = 0;
    for (int j = t.row_length(r); j >= 1; --j)
      if (t.at(r, j) == value) {
        c = j;
        break;
      }
    if (c == 0) continue;
    // the cell below must stay strictly larger after the change
    if (r < t.num_rows() && t.row_length(r + 1) >= c && t.at(r + 1, c) <= value + 1) continue;
    rows.push_back(r);
  }
  return rows;
}

namespace {

Tableau decremented(const Tableau& t, int color, int row) {
  auto rows = t.rows();
  for (auto& cell : rows[row - 1])
    if (cell == color + 1) {
      cell = color;
      break;
    }
  return Tableau(std::move(rows), t.n());
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GtLattice::GtLattice(Partition shape, int n) : shape_(std::move(shape)), n_(n) {
  verts_ = enumerate_ssyt(shape_, n_);
  for (int id = 0; id < size(); ++id) word_to_id_[verts_[id].row_word()] = id;

  for (int id = 0; id < size(); ++id)
    for (int k = 1; k <= num_colors(); ++k)
      for (int r : decrementable_rows(verts_[id], k)) {
        Tableau t = decremented(verts_[id], k, r);
        auto it = word_to_id_.find(t.row_word());
        if (it == word_to_id_.end()) throw std::logic_error("cover target missing from vertex set");
        edges_.push_back({id, it->second, k, r});
      }
  rebuild_adjacency();

  // closed-form rank: each cover raises sum(n - entry) by exactly 1
  std::vector<int> raw(size(), 0);
  for (int id = 0; id < size(); ++id)
    for (const auto& row : verts_[id].rows())
      for (int v : row) raw[id] += n_ - v;
  int base = size() ? *std::min_element(raw.begin(), raw.end()) : 0;
  rank_.resize(size());
  for (int id = 0; id < size(); ++id) rank_[id] = raw[id] - base;

  int mins = 0, maxs = 0;
  for (int id = 0; id < size(); ++id) {
    if (down_[id].empty()) { min_id_ = id; ++mins; }
    if (up_[id].empty()) { max_id_ = id; ++maxs; }
  }
  if (size() && (mins != 1 || maxs != 1))
    throw std::logic_error("lattice must have a unique minimum and maximum");

  if (size()) {
    Dsu all(size());
    for (const auto& e : edges_) all.join(e.from, e.to);
    for (int id = 0; id < size(); ++id)
      if (all.find(id) != all.find(0)) throw std::logic_error("lattice must be connected");
  }

  mu_.resize(size());
  for (int id = 0; id < size(); ++id) mu_[id] = content(verts_[id]);

  comps_.resize(num_colors() > 0 ? num_colors() : 0);
  comp_of_.assign(num_colors() > 0 ? num_colors() : 0, std::vector<int>(size(), -1));
  m_.assign(size(), std::vector<int>(std::max(num_colors(), 0), 0));
  for (int k = 1; k <= num_colors(); ++k) {
    Dsu dsu(size());
    for (const auto& e : edges_)
      if (e.color == k) dsu.join(e.from, e.to);
    std::map<int, int> root_to_comp;
    auto& comps = comps_[k - 1];
    for (int id = 0; id < size(); ++id) {
      int root = dsu.find(id);
      auto [it, fresh] = root_to_comp.try_emplace(root, static_cast<int>(comps.size()));
      if (fresh) comps.push_back(ComponentInfo{k, {}, {}, 0});
      comps[it->second].members.push_back(id);
      comp_of_[k - 1][id] = it->second;
    }
    for (auto& comp : comps) {
      int lo = rank_[comp.members.front()], hi = lo;
      for (int v : comp.members) {
        lo = std::min(lo, rank_[v]);
        hi = std::max(hi, rank_[v]);
      }
      comp.length = hi - lo;
      comp.rho.reserve(comp.members.size());
      for (int v : comp.members) comp.rho.push_back(rank_[v] - lo);
    }
    for (const auto& comp : comps)
      for (size_t i = 0; i < comp.members.size(); ++i) {
        int v = comp.members[i];
        m_[v][k - 1] = 2 * comp.rho[i] - comp.length;
        if (m_[v][k - 1] != mu_[v][k - 1] - mu_[v][k])
          throw std::logic_error("component m-value disagrees with content difference");
      }
  }
}

void GtLattice::rebuild_adjacency() {
  up_.assign(size(), {});
  down_.assign(size(), {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    up_[edges_[e].from].push_back(e);
    down_[edges_[e].to].push_back(e);
  }
}

int GtLattice::vertex_id(const Tableau& t) const {
  auto it = word_to_id_.find(t.row_word());
  return it == word_to_id_.end() ? -1 : it->second;
}

int GtLattice::edge_between(int from, int to) const {
  for (int e : up_[from])
    if (edges_[e].to == to) return e;
  return -1;
}

GtLattice GtLattice::recolored(int edge_id, int new_color) const {
  GtLattice copy = *this;
  copy.edges_[edge_id].color = new_color;
  return copy;
}

GtLattice build_lattice(const Partition& shape, int n) { return GtLattice(shape, n); }

}  // namespace gt
