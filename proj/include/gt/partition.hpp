#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gt {

// Weakly decreasing sequence of non-negative integers. Trailing zeros are
// stripped on construction; part(i) pads with zeros beyond the last part, so
// a partition can be read at any ambient length.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Comma-separated form, e.g. "2,1". Empty string is the empty partition.
  static Partition parse(const std::string& text);

  // 1-based; returns 0 for i beyond the last nonzero part.
  int part(int i) const {
    return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
  }

  int num_parts() const { return static_cast<int>(parts_.size()); }
  int size() const;       // total cell count
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  // True iff other fits inside this diagram row by row.
  bool contains(const Partition& other) const;

  // Conjugate part: the height of column c.
  int column_height(int c) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// True iff inner <= outer and the skew diagram outer/inner has at most one
// cell per column (outer[i+1] <= inner[i] for all i).
bool is_horizontal_strip(const Partition& inner, const Partition& outer);

}  // namespace gt
