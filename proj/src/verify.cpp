#include "gt/verify.hpp"

#include <array>
#include <set>
#include <stdexcept>

namespace gt {

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

ConditionReport check_structure(const GtLattice& lat) {
  ConditionReport report{"structure", {}};
  for (size_t e = 0; e < lat.edges().size(); ++e) {
    const Edge& edge = lat.edges()[e];
    std::vector<int> expected = lat.weight(edge.from);
    expected[edge.color - 1] += 1;
    expected[edge.color] -= 1;
    if (lat.weight(edge.to) != expected)
      report.add("edge " + std::to_string(e) + " (" + lat.vertex(edge.from).str() + " -> " +
                     lat.vertex(edge.to).str() + ", color " + std::to_string(edge.color) + ")",
                 vec_str(expected), vec_str(lat.weight(edge.to)));
  }
  return report;
}

ConditionReport check_crossing(const GtLattice& lat, const EdgeLabeling& lab) {
  ConditionReport report{"crossing", {}};
  for (int v = 0; v < lat.size(); ++v)
    for (int k = 1; k <= lat.num_colors(); ++k) {
      Rat balance(0);
      for (int e : lat.down_edges(v))
        if (lat.edges()[e].color == k) balance += lab.labels[e].pi;
      for (int e : lat.up_edges(v))
        if (lat.edges()[e].color == k) balance -= lab.labels[e].pi;
      if (balance != lat.m(v, k))
        report.add("vertex " + std::to_string(v) + " (" + lat.vertex(v).str() + "), color " +
                       std::to_string(k),
                   std::to_string(lat.m(v, k)), rat_str(balance));
    }
  return report;
}

namespace {

// LHS of the diamond relation for ordered (s, t, i, j): paths s -up j-> u,
// t -up i-> u through common upper covers.
Rat diamond_lhs(const GtLattice& lat, const EdgeLabeling& lab, int s, int t, int i, int j) {
  Rat total(0);
  for (int e : lat.up_edges(s)) {
    if (lat.edges()[e].color != j) continue;
    int u = lat.edges()[e].to;
    int back = lat.edge_between(t, u);
    if (back >= 0 && lat.edges()[back].color == i) total += lab.labels[e].c * lab.labels[back].d;
  }
  return total;
}

Rat diamond_rhs(const GtLattice& lat, const EdgeLabeling& lab, int s, int t, int i, int j) {
  Rat total(0);
  for (int e : lat.down_edges(s)) {
    if (lat.edges()[e].color != i) continue;
    int r = lat.edges()[e].from;
    int across = lat.edge_between(r, t);
    if (across >= 0 && lat.edges()[across].color == j)
      total += lab.labels[e].d * lab.labels[across].c;
  }
  return total;
}

void check_diamond_pair(const GtLattice& lat, const EdgeLabeling& lab, int s, int t, int i,
                        int j, ConditionReport& report) {
  if (s == t && i == j) {
    // there this relation degenerates to the crossing relation at s
    Rat diff = diamond_rhs(lat, lab, s, t, i, j) - diamond_lhs(lat, lab, s, t, i, j);
    if (diff != lat.m(s, i))
      report.add("vertex " + std::to_string(s) + ", color " + std::to_string(i) +
                     " (coincident pair)",
                 std::to_string(lat.m(s, i)), rat_str(diff));
    return;
  }
  Rat lhs = diamond_lhs(lat, lab, s, t, i, j);
  Rat rhs = diamond_rhs(lat, lab, s, t, i, j);
  if (lhs != rhs)
    report.add("pair (" + std::to_string(s) + "," + std::to_string(t) + "), colors (" +
                   std::to_string(i) + "," + std::to_string(j) + ")",
               rat_str(lhs), rat_str(rhs));
}

}  // namespace

ConditionReport check_diamond(const GtLattice& lat, const EdgeLabeling& lab, bool exhaustive) {
  ConditionReport report{"diamond", {}};
  if (exhaustive) {
    for (int s = 0; s < lat.size(); ++s)
      for (int t = 0; t < lat.size(); ++t) {
        if (lat.rank(s) != lat.rank(t)) continue;
        for (int i = 1; i <= lat.num_colors(); ++i)
          for (int j = 1; j <= lat.num_colors(); ++j)
            check_diamond_pair(lat, lab, s, t, i, j, report);
      }
    return report;
  }

  // Only tuples sharing an upper or lower cover can have a nonzero side, so
  // enumerate those; the coincident instances are checked for every vertex.
  std::set<std::array<int, 4>> tuples;
  for (int u = 0; u < lat.size(); ++u)
    for (int e1 : lat.down_edges(u))
      for (int e2 : lat.down_edges(u)) {
        if (e1 == e2) continue;
        tuples.insert({lat.edges()[e1].from, lat.edges()[e2].from, lat.edges()[e2].color,
                       lat.edges()[e1].color});
      }
  for (int r = 0; r < lat.size(); ++r)
    for (int e1 : lat.up_edges(r))
      for (int e2 : lat.up_edges(r)) {
        if (e1 == e2) continue;
        tuples.insert({lat.edges()[e1].to, lat.edges()[e2].to, lat.edges()[e1].color,
                       lat.edges()[e2].color});
      }
  for (const auto& [s, t, i, j] : tuples) check_diamond_pair(lat, lab, s, t, i, j, report);
  for (int s = 0; s < lat.size(); ++s)
    for (int i = 1; i <= lat.num_colors(); ++i) check_diamond_pair(lat, lab, s, s, i, i, report);
  return report;
}

ConditionReport verify_all(const GtLattice& lat, const EdgeLabeling& lab,
                           bool exhaustive_diamond) {
  ConditionReport report{"all-conditions", {}};
  for (const ConditionReport& sub :
       {check_structure(lat), check_crossing(lat, lab), check_diamond(lat, lab, exhaustive_diamond)})
    for (const Violation& v : sub.violations)
      report.violations.push_back({sub.condition + ": " + v.context, v.expected, v.actual});
  return report;
}

Rat identity_lhs(const IdentityInstance& inst) {
  size_t n = inst.x.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (inst.x[i] == inst.x[j]) throw std::invalid_argument("identity instance: duplicate x values");
  Rat total(0);
  for (size_t i = 0; i < n; ++i) {
    Rat term = inst.y[i];
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Rat dx = inst.x[j] - inst.x[i];
      term *= (dx + inst.y[j]) / dx;
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

bool check_identity(const IdentityInstance& inst) {
  Rat rhs(0);
  for (const Rat& v : inst.y) rhs += v;
  return identity_lhs(inst) == rhs;
}

IdentityInstance random_identity_instance(std::mt19937_64& rng, int max_n) {
  auto draw = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  auto draw_rat = [&] { return make_rat(draw(-20, 20), draw(1, 10)); };
  IdentityInstance inst;
  int n = static_cast<int>(draw(1, max_n));
  while (static_cast<int>(inst.x.size()) < n) {
    Rat candidate = draw_rat();
    bool seen = false;
    for (const Rat& prev : inst.x) seen = seen || prev == candidate;
    if (!seen) inst.x.push_back(candidate);
  }
  for (int i = 0; i < n; ++i) inst.y.push_back(draw_rat());
  return inst;
}

}  // namespace gt
