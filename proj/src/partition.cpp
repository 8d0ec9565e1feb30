#include "gt/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("malformed partition: " + text);
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("malformed partition: " + text);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
  for (int i = 1; i <= other.num_parts(); ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

int Partition::column_height(int c) const {
  int h = 0;
  while (h < num_parts() && parts_[h] >= c) ++h;
  return h;
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
  if (!outer.contains(inner)) return false;
  for (int i = 1; i <= outer.num_parts(); ++i)
    if (outer.part(i + 1) > inner.part(i)) return false;
  return true;
}

}  // namespace gt
