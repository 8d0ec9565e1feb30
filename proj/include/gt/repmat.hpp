#pragma once

#include <map>
#include <utility>

#include "gt/labels.hpp"
#include "gt/report.hpp"

namespace gt {

// Sparse matrix over exact rationals; zeros are never stored.
class SparseRationalMatrix {
 public:
  explicit SparseRationalMatrix(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int nnz() const { return static_cast<int>(entries_.size()); }
  bool is_zero() const { return entries_.empty(); }
  const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }

  void set(int row, int col, const Rat& value);
  void add_to(int row, int col, const Rat& value);
  Rat at(int row, int col) const;
  Rat trace() const;

  SparseRationalMatrix operator+(const SparseRationalMatrix& other) const;
  SparseRationalMatrix operator-(const SparseRationalMatrix& other) const;
  SparseRationalMatrix operator*(const SparseRationalMatrix& other) const;
  SparseRationalMatrix scaled(const Rat& factor) const;

  friend bool operator==(const SparseRationalMatrix&, const SparseRationalMatrix&) = default;

 private:
  int dim_;
  std::map<std::pair<int, int>, Rat> entries_;
};

SparseRationalMatrix commutator(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

// Type A Cartan matrix: 2 on the diagonal, -1 between adjacent colors.
struct CartanMatrixSLn {
  int rank = 0;
  int at(int i, int j) const {
    if (i == j) return 2;
    return (i - j == 1 || j - i == 1) ? -1 : 0;
  }
};

// Raising operator of the given color: entry (to, from) = c on every edge.
SparseRationalMatrix matrix_X(const GtLattice& lat, const EdgeLabeling& lab, int color);
// Lowering operator: entry (from, to) = d on every edge.
SparseRationalMatrix matrix_Y(const GtLattice& lat, const EdgeLabeling& lab, int color);
// Diagonal of m-values.
SparseRationalMatrix matrix_H(const GtLattice& lat, int color);
// Diagonal entry counts: mu_k per vertex, k = 1..n.
SparseRationalMatrix matrix_Ekk_diag(const GtLattice& lat, int k);

// Commutation and Serre relations of the Chevalley generators, all checked
// by exact matrix arithmetic. Violations carry matrix coordinates.
ConditionReport check_sl_relations(const GtLattice& lat, const EdgeLabeling& lab);

// The basis vector at the lattice maximum is annihilated by every raising
// operator, carries eigenvalue shape_k - shape_{k+1} under H_k, and its
// closure under the lowering operators spans the whole space (exact rank).
ConditionReport highest_weight_check(const GtLattice& lat, const EdgeLabeling& lab);

// Rank of a list of rational row vectors by fraction-free elimination on
// primitive integer vectors.
int rational_rank(const std::vector<std::vector<Rat>>& rows);

}  // namespace gt
