#pragma once

#include <string>
#include <vector>

#include "gt/partition.hpp"
#include "gt/rational.hpp"

namespace gt {

// Semistandard Young tableau with entries in [n]: rows weakly increase left
// to right, columns strictly increase top to bottom.
class Tableau {
 public:
  Tableau(std::vector<std::vector<int>> rows, int n);

  // Textual form "1,1;2": rows comma-separated, separated by semicolons.
  static Tableau parse(const std::string& text, int n);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int n() const { return n_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int at(int r, int c) const { return rows_[r - 1][c - 1]; }  // 1-based
  int row_length(int r) const {
    return (r >= 1 && r <= num_rows()) ? static_cast<int>(rows_[r - 1].size()) : 0;
  }
  Partition shape() const;

  std::vector<int> row_word() const;  // rows concatenated top to bottom
  std::string str() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  int n_ = 0;
};

// Triangular array lambda_{ki}, k = 1..n, i = 1..k, rows interlacing:
// lambda_{ki} >= lambda_{k-1,i} >= lambda_{k,i+1}. Equivalently a chain of
// partitions lambda^(1) <= ... <= lambda^(n) whose consecutive skews are
// horizontal strips.
class GtPattern {
 public:
  explicit GtPattern(std::vector<std::vector<int>> rows);

  int n() const { return static_cast<int>(rows_.size()); }
  int entry(int k, int i) const { return rows_[k - 1][i - 1]; }  // 1-based
  // lambda^(k); k = 0 yields the empty partition.
  Partition level(int k) const;

  friend bool operator==(const GtPattern&, const GtPattern&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

GtPattern ssyt_to_gt(const Tableau& t);
Tableau gt_to_ssyt(const GtPattern& p);

// mu[k-1] = number of entries equal to k, k = 1..n.
std::vector<int> content(const Tableau& t);

// All semistandard fillings of the shape with entries in [n], ordered
// lexicographically by row-reading word. Throws std::invalid_argument when
// the shape has more than n nonzero rows (no filling can be column-strict).
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n);

// Product formula for the number of such fillings.
Int weyl_dimension(const Partition& shape, int n);

}  // namespace gt
