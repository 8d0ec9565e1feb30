#include "gt/labels.hpp"

#include <stdexcept>

namespace gt {

RimData corner_data(const Partition& below, const Partition& at, const Partition& above) {
  RimData rd;
  int z = at.num_parts();
  for (int r = 1; r <= z + 1; ++r)
    if (r == 1 || at.part(r - 1) > at.part(r)) rd.rows.push_back(r);
  rd.p = static_cast<int>(rd.rows.size());
  for (int i = 0; i < rd.p; ++i) {
    int r = rd.rows[i];
    rd.a.push_back(at.part(1) - at.part(r) + r);
    rd.b.push_back(above.part(r) - at.part(r));
    if (rd.b.back() < 0) throw std::invalid_argument("shapes are not nested");
  }
  for (int i = 0; i + 1 < rd.p; ++i) {
    int next = rd.rows[i + 1];
    rd.a_prime.push_back(at.part(1) - at.part(next - 1) + next);
    rd.b_prime.push_back(at.part(next - 1) - below.part(next - 1));
    if (rd.b_prime.back() < 0) throw std::invalid_argument("shapes are not nested");
  }
  return rd;
}

RimData rim_data(const GtPattern& p, int color) {
  return corner_data(p.level(color - 1), p.level(color), p.level(color + 1));
}

Rat coeff_c(const RimData& rd, int i) {
  Rat c(rd.b[i - 1]);
  for (int j = 1; j <= rd.p; ++j) {
    if (j == i) continue;
    if (j < i)
      c *= make_rat(rd.a[i - 1] - rd.a[j - 1] + rd.b[j - 1], rd.a[i - 1] - rd.a[j - 1]);
    else
      c *= make_rat(rd.a[j - 1] - rd.a[i - 1] - rd.b[j - 1], rd.a[j - 1] - rd.a[i - 1]);
  }
  return c;
}

Rat coeff_c(const GtPattern& p, int color, int i) { return coeff_c(rim_data(p, color), i); }

Rat coeff_d(const RimData& rd, int i) {
  Rat d(rd.b_prime[i - 1]);
  for (int j = 1; j <= rd.p - 1; ++j) {
    if (j == i) continue;
    if (j < i)
      d *= make_rat(rd.a_prime[i - 1] - rd.a_prime[j - 1] - rd.b_prime[j - 1],
                    rd.a_prime[i - 1] - rd.a_prime[j - 1]);
    else
      d *= make_rat(rd.a_prime[j - 1] - rd.a_prime[i - 1] + rd.b_prime[j - 1],
                    rd.a_prime[j - 1] - rd.a_prime[i - 1]);
  }
  return d;
}

Rat coeff_d(const GtPattern& p, int color, int i) { return coeff_d(rim_data(p, color), i); }

Rat edge_product(const RimData& rd, int i) {
  Rat pi(rd.b[i - 1]);
  for (int j = 1; j <= rd.p; ++j) {
    if (j == i) continue;
    pi *= make_rat(rd.a[j - 1] - rd.a[i - 1] - rd.b[j - 1], rd.a[j - 1] - rd.a[i - 1]);
  }
  for (int j = 1; j <= rd.p - 1; ++j)
    pi *= make_rat(rd.a_prime[j - 1] - rd.a[i - 1] + rd.b_prime[j - 1],
                   rd.a_prime[j - 1] - rd.a[i - 1]);
  return pi;
}

Rat edge_product(const GtPattern& p, int color, int i) {
  return edge_product(rim_data(p, color), i);
}

namespace {

int corner_index_for_row(const RimData& rd, int row) {
  for (int i = 0; i < rd.p; ++i)
    if (rd.rows[i] == row) return i + 1;
  return -1;
}

int removal_index_for_row(const RimData& rd, int row) {
  for (int i = 0; i + 1 < rd.p; ++i)
    if (rd.rows[i + 1] - 1 == row) return i + 1;
  return -1;
}

}  // namespace

EdgeLabeling label_all(const GtLattice& lat) {
  std::vector<GtPattern> patterns;
  patterns.reserve(lat.size());
  for (int v = 0; v < lat.size(); ++v) patterns.push_back(ssyt_to_gt(lat.vertex(v)));

  EdgeLabeling out;
  out.labels.reserve(lat.edges().size());
  for (const Edge& e : lat.edges()) {
    RimData lower = rim_data(patterns[e.from], e.color);
    int ci = corner_index_for_row(lower, e.row);
    if (ci < 0) throw std::logic_error("cover row is not an addable corner of the lower shape");
    Rat c = coeff_c(lower, ci);

    RimData upper = rim_data(patterns[e.to], e.color);
    int di = removal_index_for_row(upper, e.row);
    if (di < 0) throw std::logic_error("cover row is not a removable corner of the upper shape");
    Rat d = coeff_d(upper, di);

    if (c <= 0 || d <= 0) throw std::logic_error("edge received a non-positive label");
    out.labels.push_back({c, d, Rat(c * d)});
  }
  return out;
}

Rat classical_c(const GtPattern& p, int k, int i) {
  auto l = [&p](int row, int j) { return p.entry(row, j) - j + 1; };
  Int num = -1, den = 1;
  for (int j = 1; j <= k + 1; ++j) num *= l(k, i) - l(k + 1, j);
  for (int j = 1; j <= k; ++j)
    if (j != i) den *= l(k, i) - l(k, j);
  Rat out(num, den);
  out.canonicalize();
  return out;
}

Rat classical_d(const GtPattern& p, int k, int i) {
  auto l = [&p](int row, int j) { return p.entry(row, j) - j + 1; };
  Int num = 1, den = 1;
  for (int j = 1; j <= k - 1; ++j) num *= l(k, i) - l(k - 1, j);
  for (int j = 1; j <= k; ++j)
    if (j != i) den *= l(k, i) - l(k, j);
  Rat out(num, den);
  out.canonicalize();
  return out;
}

long classical_diag(const GtPattern& p, int k) {
  long total = 0;
  for (int i = 1; i <= k; ++i) total += p.entry(k, i);
  for (int i = 1; i <= k - 1; ++i) total -= p.entry(k - 1, i);
  return total;
}

ConditionReport compare_products(const GtLattice& lat, const EdgeLabeling& lab) {
  ConditionReport report{"oracle-products", {}};
  std::vector<GtPattern> patterns;
  patterns.reserve(lat.size());
  for (int v = 0; v < lat.size(); ++v) patterns.push_back(ssyt_to_gt(lat.vertex(v)));

  for (size_t e = 0; e < lat.edges().size(); ++e) {
    const Edge& edge = lat.edges()[e];
    Rat pi_classical =
        classical_c(patterns[edge.from], edge.color, edge.row) *
        classical_d(patterns[edge.to], edge.color, edge.row);
    pi_classical.canonicalize();
    if (pi_classical != lab.labels[e].pi)
      report.add("edge " + std::to_string(e) + " (" + lat.vertex(edge.from).str() + " -> " +
                     lat.vertex(edge.to).str() + ", color " + std::to_string(edge.color) + ")",
                 rat_str(lab.labels[e].pi), rat_str(pi_classical));
  }
  return report;
}

int count_corner_exception_edges(const GtLattice& lat) {
  std::vector<GtPattern> patterns;
  patterns.reserve(lat.size());
  for (int v = 0; v < lat.size(); ++v) patterns.push_back(ssyt_to_gt(lat.vertex(v)));
  int count = 0;
  for (const Edge& e : lat.edges()) {
    RimData lower = rim_data(patterns[e.from], e.color);
    RimData upper = rim_data(patterns[e.to], e.color);
    if (lower.rows.back() == e.color + 1 || upper.rows.back() == e.color + 1) ++count;
  }
  return count;
}

}  // namespace gt
