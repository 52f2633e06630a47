#include "matwalk/hypotheses.hpp"

#include <algorithm>

namespace matwalk {

std::string to_string(HypStatus s) {
  switch (s) {
    case HypStatus::Holds:
      return "holds";
    case HypStatus::Fails:
      return "fails";
    default:
      return "not-applicable";
  }
}

AcyclicReport check_acyclic_matrix(const ExactMatrix& a) {
  const AcyclicityResult r = is_acyclic(digraph_of_matrix(a));
  if (r.acyclic) return {HypStatus::Holds, std::nullopt};
  return {HypStatus::Fails, r.witness};
}

TriangleReport check_triangle_condition(const ExactMatrix& a) {
  const int n = a.order();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (a(i, j).is_zero()) {
        return {HypStatus::Fails, std::make_pair(i, j), std::nullopt};
      }
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      const Scalar lhs = a(i, j) * a(j, j + 1) * a(j + 1, i);
      const Scalar rhs = a(j, i) * a(j + 1, j) * a(i, j + 1);
      if (!(lhs == rhs)) {
        return {HypStatus::Fails, std::nullopt, std::make_pair(i, j)};
      }
    }
  }
  return {HypStatus::Holds, std::nullopt, std::nullopt};
}

Ratio cycle_ratio(const ExactMatrix& a, const std::vector<int>& cycle) {
  if (cycle.size() < 2) throw std::invalid_argument("cycle needs at least 2 vertices");
  Scalar forward = Scalar::integer(1);
  Scalar backward = Scalar::integer(1);
  for (size_t t = 0; t < cycle.size(); ++t) {
    const int u = cycle[t];
    const int v = cycle[(t + 1) % cycle.size()];
    if (a(u, v).is_zero() || a(v, u).is_zero()) {
      throw std::invalid_argument("cycle or its reverse is not a walk in D(A)");
    }
    forward = forward * a(u, v);
    backward = backward * a(v, u);
  }
  return Ratio(std::move(forward), std::move(backward));
}

namespace {

std::optional<std::pair<int, int>> zero_pattern_asymmetry(const ExactMatrix& a) {
  for (int i = 1; i <= a.order(); ++i) {
    for (int j = i + 1; j <= a.order(); ++j) {
      if (a(i, j).is_zero() != a(j, i).is_zero()) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool cycle_is_valid(const std::vector<int>& cycle, int order) {
  if (cycle.size() < 3) return false;
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return sorted.front() >= 1 && sorted.back() <= order;
}

}  // namespace

CertificateReport check_certificate(const ExactMatrix& a,
                                    const CycleBasisCertificate& cert) {
  if (auto pair = zero_pattern_asymmetry(a)) {
    return {HypStatus::Fails, "zero pattern is asymmetric", pair, std::nullopt};
  }
  const WeightedDigraph g = digraph_of_matrix(a);
  const Ratio one(Scalar::integer(1), Scalar::integer(1));
  for (const std::vector<int>& cycle : cert.cycles) {
    if (!cycle_is_valid(cycle, a.order())) {
      return {HypStatus::Fails, "certificate entry is not a simple cycle of length >= 3",
              std::nullopt, cycle};
    }
    std::vector<int> closed = cycle;
    closed.push_back(cycle.front());
    if (!is_walk(g, closed) || !is_walk(g, reverse_sequence(closed))) {
      return {HypStatus::Fails, "cycle or its reverse is not directed in D(A)",
              std::nullopt, cycle};
    }
    if (!ratio_eq(cycle_ratio(a, cycle), one)) {
      return {HypStatus::Fails, "cycle weight differs from its reverse", std::nullopt, cycle};
    }
  }
  std::vector<Chain> chains;
  chains.reserve(cert.cycles.size());
  for (const std::vector<int>& cycle : cert.cycles) {
    chains.push_back(chain_of_vertex_cycle(cycle));
  }
  const UndirectedGraph ug = underlying_graph(g);
  if (!is_z_basis(ug, chains)) {
    return {HypStatus::Fails, "cycles do not form a Z-basis of the cycle space",
            std::nullopt, std::nullopt};
  }
  return {HypStatus::Holds, "", std::nullopt, std::nullopt};
}

CertificateSearchResult search_certificate(const ExactMatrix& a) {
  CertificateSearchResult result{false, {}, std::nullopt, true};
  if (zero_pattern_asymmetry(a)) {
    result.pattern_symmetric = false;
    return result;
  }
  const WeightedDigraph g = digraph_of_matrix(a);
  const UndirectedGraph ug = underlying_graph(g);
  const FundamentalBasis fb = fundamental_cycle_basis_full(ug);
  const Ratio one(Scalar::integer(1), Scalar::integer(1));
  for (const std::vector<int>& cycle : fb.vertex_cycles) {
    if (!ratio_eq(cycle_ratio(a, cycle), one)) {
      result.failing_cycle = cycle;
      return result;
    }
  }
  result.found = true;
  result.certificate.cycles = fb.vertex_cycles;
  return result;
}

HypothesisReport check_all_hypotheses(const ExactMatrix& a) {
  HypothesisReport report;
  report.acyclic = check_acyclic_matrix(a);
  report.triangle = check_triangle_condition(a);

  const CertificateSearchResult search = search_certificate(a);
  if (!search.pattern_symmetric) {
    report.certificate = {HypStatus::NotApplicable, "zero pattern is asymmetric",
                          std::nullopt, std::nullopt};
  } else if (search.found) {
    report.certificate = {HypStatus::Holds, "", std::nullopt, std::nullopt};
    report.found_certificate = search.certificate;
  } else {
    report.certificate = {HypStatus::Fails, "fundamental cycle with weight != reverse weight",
                          std::nullopt, search.failing_cycle};
  }
  return report;
}

}  // namespace matwalk
