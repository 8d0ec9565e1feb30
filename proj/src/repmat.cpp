#include "gt/repmat.hpp"

#include <deque>
#include <stdexcept>

namespace gt {

void SparseRationalMatrix::set(int row, int col, const Rat& value) {
  if (value == 0)
    entries_.erase({row, col});
  else
    entries_[{row, col}] = value;
}

void SparseRationalMatrix::add_to(int row, int col, const Rat& value) {
  auto it = entries_.find({row, col});
  if (it == entries_.end()) {
    if (value != 0) entries_[{row, col}] = value;
    return;
  }
  it->second += value;
  if (it->second == 0) entries_.erase(it);
}

Rat SparseRationalMatrix::at(int row, int col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rat(0) : it->second;
}

Rat SparseRationalMatrix::trace() const {
  Rat total(0);
  for (const auto& [pos, value] : entries_)
    if (pos.first == pos.second) total += value;
  return total;
}

SparseRationalMatrix SparseRationalMatrix::operator+(const SparseRationalMatrix& other) const {
  SparseRationalMatrix out = *this;
  for (const auto& [pos, value] : other.entries_) out.add_to(pos.first, pos.second, value);
  return out;
}

SparseRationalMatrix SparseRationalMatrix::operator-(const SparseRationalMatrix& other) const {
  SparseRationalMatrix out = *this;
  for (const auto& [pos, value] : other.entries_) out.add_to(pos.first, pos.second, Rat(-value));
  return out;
}

SparseRationalMatrix SparseRationalMatrix::operator*(const SparseRationalMatrix& other) const {
  // row-index the right factor once
  std::vector<std::vector<std::pair<int, const Rat*>>> rows(other.dim_);
  for (const auto& [pos, value] : other.entries_) rows[pos.first].push_back({pos.second, &value});
  SparseRationalMatrix out(dim_);
  for (const auto& [pos, value] : entries_)
    for (const auto& [col, rhs] : rows[pos.second]) out.add_to(pos.first, col, Rat(value * *rhs));
  return out;
}

SparseRationalMatrix SparseRationalMatrix::scaled(const Rat& factor) const {
  SparseRationalMatrix out(dim_);
  if (factor == 0) return out;
  for (const auto& [pos, value] : entries_) out.entries_[pos] = value * factor;
  return out;
}

SparseRationalMatrix commutator(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  return a * b - b * a;
}

SparseRationalMatrix matrix_X(const GtLattice& lat, const EdgeLabeling& lab, int color) {
  SparseRationalMatrix out(lat.size());
  for (size_t e = 0; e < lat.edges().size(); ++e)
    if (lat.edges()[e].color == color)
      out.set(lat.edges()[e].to, lat.edges()[e].from, lab.labels[e].c);
  return out;
}

SparseRationalMatrix matrix_Y(const GtLattice& lat, const EdgeLabeling& lab, int color) {
  SparseRationalMatrix out(lat.size());
  for (size_t e = 0; e < lat.edges().size(); ++e)
    if (lat.edges()[e].color == color)
      out.set(lat.edges()[e].from, lat.edges()[e].to, lab.labels[e].d);
  return out;
}

SparseRationalMatrix matrix_H(const GtLattice& lat, int color) {
  SparseRationalMatrix out(lat.size());
  for (int v = 0; v < lat.size(); ++v) out.set(v, v, Rat(lat.m(v, color)));
  return out;
}

SparseRationalMatrix matrix_Ekk_diag(const GtLattice& lat, int k) {
  SparseRationalMatrix out(lat.size());
  for (int v = 0; v < lat.size(); ++v) out.set(v, v, Rat(lat.weight(v)[k - 1]));
  return out;
}

namespace {

void require_zero(const SparseRationalMatrix& diff, const std::string& what,
                  ConditionReport& report) {
  if (diff.is_zero()) return;
  const auto& [pos, value] = *diff.entries().begin();
  report.add(what + " at (" + std::to_string(pos.first) + "," + std::to_string(pos.second) + ")",
             "0", rat_str(value));
}

}  // namespace

ConditionReport check_sl_relations(const GtLattice& lat, const EdgeLabeling& lab) {
  ConditionReport report{"sl-relations", {}};
  int rank = lat.num_colors();
  CartanMatrixSLn cartan{rank};
  std::vector<SparseRationalMatrix> X, Y, H;
  for (int k = 1; k <= rank; ++k) {
    X.push_back(matrix_X(lat, lab, k));
    Y.push_back(matrix_Y(lat, lab, k));
    H.push_back(matrix_H(lat, k));
  }
  auto name = [](const std::string& fmt, int i, int j) {
    return fmt + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j) {
      require_zero(commutator(H[i - 1], H[j - 1]), name("[H,H]", i, j), report);

      SparseRationalMatrix xy = commutator(X[i - 1], Y[j - 1]);
      if (i == j) xy = xy - H[i - 1];
      require_zero(xy, name("[X,Y]-delta*H", i, j), report);

      require_zero(commutator(H[i - 1], X[j - 1]) - X[j - 1].scaled(Rat(cartan.at(j, i))),
                   name("[H,X]-A*X", i, j), report);
      require_zero(commutator(H[i - 1], Y[j - 1]) + Y[j - 1].scaled(Rat(cartan.at(j, i))),
                   name("[H,Y]+A*Y", i, j), report);

      if (i == j) continue;
      if (cartan.at(i, j) == -1) {
        require_zero(commutator(X[i - 1], commutator(X[i - 1], X[j - 1])), name("serre-X", i, j),
                     report);
        require_zero(commutator(Y[i - 1], commutator(Y[i - 1], Y[j - 1])), name("serre-Y", i, j),
                     report);
      } else {
        require_zero(commutator(X[i - 1], X[j - 1]), name("[X,X]", i, j), report);
        require_zero(commutator(Y[i - 1], Y[j - 1]), name("[Y,Y]", i, j), report);
      }
    }
  return report;
}

namespace {

// Echelon basis of primitive integer vectors; insertion uses cross-multiply
// elimination with content stripping, so no rational division ever happens.
class IntEchelon {
 public:
  bool insert(std::vector<Int> v) {
    strip_content(v);
    while (true) {
      int pivot = first_nonzero(v);
      if (pivot < 0) return false;
      auto it = rows_.find(pivot);
      if (it == rows_.end()) {
        if (v[pivot] < 0)
          for (Int& c : v) c = -c;
        rows_.emplace(pivot, std::move(v));
        return true;
      }
      const std::vector<Int>& base = it->second;
      Int scale = v[pivot];
      for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] * base[pivot] - base[j] * scale;
      strip_content(v);
    }
  }

  int size() const { return static_cast<int>(rows_.size()); }

 private:
  static int first_nonzero(const std::vector<Int>& v) {
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) return static_cast<int>(j);
    return -1;
  }

  static void strip_content(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& c : v) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (Int& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }

  std::map<int, std::vector<Int>> rows_;
};

std::vector<Int> to_primitive(const std::vector<Rat>& v) {
  Int lcm = 1;
  for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> out(v.size());
  for (size_t j = 0; j < v.size(); ++j) {
    Int scale;
    mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), v[j].get_den().get_mpz_t());
    out[j] = v[j].get_num() * scale;
  }
  return out;
}

std::vector<Rat> matvec(const SparseRationalMatrix& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(m.dim(), Rat(0));
  for (const auto& [pos, value] : m.entries())
    if (v[pos.second] != 0) out[pos.first] += value * v[pos.second];
  return out;
}

}  // namespace

int rational_rank(const std::vector<std::vector<Rat>>& rows) {
  IntEchelon echelon;
  int rank = 0;
  for (const auto& row : rows)
    if (echelon.insert(to_primitive(row))) ++rank;
  return rank;
}

ConditionReport highest_weight_check(const GtLattice& lat, const EdgeLabeling& lab) {
  ConditionReport report{"highest-weight", {}};
  int top = lat.max_id();
  std::vector<Rat> e_top(lat.size(), Rat(0));
  e_top[top] = 1;

  std::vector<SparseRationalMatrix> Y;
  for (int k = 1; k <= lat.num_colors(); ++k) {
    SparseRationalMatrix x = matrix_X(lat, lab, k);
    std::vector<Rat> image = matvec(x, e_top);
    for (int r = 0; r < lat.size(); ++r)
      if (image[r] != 0)
        report.add("X_" + std::to_string(k) + " on the maximum, coordinate " + std::to_string(r),
                   "0", rat_str(image[r]));
    int eigen = lat.shape().part(k) - lat.shape().part(k + 1);
    if (lat.m(top, k) != eigen)
      report.add("H_" + std::to_string(k) + " eigenvalue at the maximum", std::to_string(eigen),
                 std::to_string(lat.m(top, k)));
    Y.push_back(matrix_Y(lat, lab, k));
  }

  IntEchelon echelon;
  std::deque<std::vector<Rat>> queue;
  echelon.insert(to_primitive(e_top));
  queue.push_back(e_top);
  while (!queue.empty()) {
    std::vector<Rat> v = std::move(queue.front());
    queue.pop_front();
    for (const auto& y : Y) {
      std::vector<Rat> w = matvec(y, v);
      if (echelon.insert(to_primitive(w))) queue.push_back(std::move(w));
    }
  }
  if (echelon.size() != lat.size())
    report.add("dimension generated from the maximum by the lowering operators",
               std::to_string(lat.size()), std::to_string(echelon.size()));
  return report;
}

}  // namespace gt
