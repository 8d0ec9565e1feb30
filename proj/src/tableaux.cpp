#include "gt/tableaux.hpp"

#include <sstream>
#include <stdexcept>

namespace gt {

Tableau::Tableau(std::vector<std::vector<int>> rows, int n) : rows_(std::move(rows)), n_(n) {
  if (n_ < 0) throw std::invalid_argument("tableau entry bound must be non-negative");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (r + 1 < rows_.size() && rows_[r + 1].size() > row.size())
      throw std::invalid_argument("tableau row lengths must form a partition");
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n_)
        throw std::invalid_argument("tableau entry out of range [1, n]");
      if (c + 1 < row.size() && row[c] > row[c + 1])
        throw std::invalid_argument("tableau rows must weakly increase");
      if (r + 1 < rows_.size() && c < rows_[r + 1].size() && rows_[r + 1][c] <= row[c])
        throw std::invalid_argument("tableau columns must strictly increase");
    }
  }
}

Tableau Tableau::parse(const std::string& text, int n) {
  std::vector<std::vector<int>> rows;
  if (!text.empty()) {
    std::stringstream in(text);
    std::string row_text;
    while (std::getline(in, row_text, ';')) {
      std::vector<int> row;
      std::stringstream row_in(row_text);
      std::string tok;
      while (std::getline(row_in, tok, ',')) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("malformed tableau: " + text);
        row.push_back(v);
      }
      rows.push_back(std::move(row));
    }
  }
  return Tableau(std::move(rows), n);
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::vector<int> Tableau::row_word() const {
  std::vector<int> word;
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string Tableau::str() const {
  std::string out;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += ';';
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

GtPattern::GtPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].size() != k + 1) throw std::invalid_argument("not a pattern: row k must have k entries");
    if (k == 0) continue;
    for (size_t i = 0; i + 1 < rows_[k].size(); ++i) {
      // interlacing with the row above (shorter row)
      if (!(rows_[k][i] >= rows_[k - 1][i] && rows_[k - 1][i] >= rows_[k][i + 1]))
        throw std::invalid_argument("not a pattern: interlacing violated");
    }
  }
  if (!rows_.empty() && rows_.back().back() < 0)
    throw std::invalid_argument("not a pattern: negative entry");
}

Partition GtPattern::level(int k) const {
  if (k == 0) return Partition();
  return Partition(rows_[k - 1]);
}

GtPattern ssyt_to_gt(const Tableau& t) {
  int n = t.n();
  std::vector<std::vector<int>> rows(n);
  for (int k = 1; k <= n; ++k) {
    rows[k - 1].resize(k, 0);
    for (int r = 1; r <= std::min(k, t.num_rows()); ++r) {
      int len = 0;
      while (len < t.row_length(r) && t.at(r, len + 1) <= k) ++len;
      rows[k - 1][r - 1] = len;
    }
  }
  return GtPattern(std::move(rows));
}

Tableau gt_to_ssyt(const GtPattern& p) {
  int n = p.n();
  Partition shape = p.level(n);
  std::vector<std::vector<int>> rows(shape.num_parts());
  for (int r = 0; r < shape.num_parts(); ++r) rows[r].resize(shape.part(r + 1), 0);
  for (int k = 1; k <= n; ++k) {
    Partition prev = p.level(k - 1), cur = p.level(k);
    for (int r = 1; r <= cur.num_parts(); ++r)
      for (int c = prev.part(r) + 1; c <= cur.part(r); ++c) rows[r - 1][c - 1] = k;
  }
  return Tableau(std::move(rows), n);
}

std::vector<int> content(const Tableau& t) {
  std::vector<int> mu(t.n(), 0);
  for (const auto& row : t.rows())
    for (int v : row) ++mu[v - 1];
  return mu;
}

namespace {

void fill_cells(const Partition& shape, int n, int r, int c,
                std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
  if (r > shape.num_parts()) {
    out.emplace_back(rows, n);
    return;
  }
  int nr = r, nc = c + 1;
  if (nc > shape.part(r)) {
    nr = r + 1;
    nc = 1;
  }
  int lo = 1;
  if (c > 1) lo = std::max(lo, rows[r - 1][c - 2]);
  if (r > 1 && shape.part(r - 1) >= c) lo = std::max(lo, rows[r - 2][c - 1] + 1);
  for (int v = lo; v <= n; ++v) {
    rows[r - 1][c - 1] = v;
    fill_cells(shape, n, nr, nc, rows, out);
  }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n) {
  if (shape.num_parts() > n)
    throw std::invalid_argument("no fillings exist: shape " + shape.str() + " has more than " +
                                std::to_string(n) + " rows");
  std::vector<Tableau> out;
  if (shape.empty()) {
    out.emplace_back(std::vector<std::vector<int>>{}, n);
    return out;
  }
  std::vector<std::vector<int>> rows(shape.num_parts());
  for (int r = 0; r < shape.num_parts(); ++r) rows[r].resize(shape.part(r + 1), 0);
  fill_cells(shape, n, 1, 1, rows, out);
  return out;
}

Int weyl_dimension(const Partition& shape, int n) {
  if (shape.num_parts() > n)
    throw std::invalid_argument("no fillings exist: shape " + shape.str() + " has more than " +
                                std::to_string(n) + " rows");
  Int num = 1, den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= shape.part(i) - shape.part(j) + j - i;
      den *= j - i;
    }
  Int dim;
  mpz_divexact(dim.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return dim;
}

}  // namespace gt
