#include "matwalk/verify.hpp"

#include <numeric>

namespace matwalk {

VerificationResult verify_identity(const ExactMatrix& a, const IdentityInstance& inst) {
  Scalar lhs = cycle_product(a, inst, CycleDirection::Forward);
  Scalar rhs = cycle_product(a, inst, CycleDirection::Reverse);
  const bool equal = lhs == rhs;
  return {inst, std::move(lhs), std::move(rhs), equal};
}

std::vector<Walk> closed_walk_family(const ExactMatrix& a, const IdentityInstance& inst,
                                     const EnumerationLimits& limits) {
  inst.validate(a.order());
  const int total = std::accumulate(inst.exponents.begin(), inst.exponents.end(), 0);
  if (a.order() > limits.max_n || total > limits.max_len) {
    throw std::length_error("closed walk enumeration limit exceeded");
  }
  const WeightedDigraph g = digraph_of_matrix(a);
  const int k = inst.k();

  std::vector<std::vector<Walk>> segments;
  segments.reserve(k);
  for (int t = 0; t < k; ++t) {
    const int from = inst.indices[t];
    const int to = inst.indices[(t + 1) % k];
    segments.push_back(enumerate_walks(g, from, to, inst.exponents[t], limits));
    if (segments.back().empty()) return {};
  }

  std::vector<Walk> family;
  std::vector<size_t> choice(k, 0);
  while (true) {
    Walk w = segments[0][choice[0]];
    for (int t = 1; t < k; ++t) w = concat_walks(g, w, segments[t][choice[t]]);
    family.push_back(std::move(w));
    int t = k - 1;
    while (t >= 0 && ++choice[t] == segments[t].size()) {
      choice[t] = 0;
      --t;
    }
    if (t < 0) break;
  }
  return family;
}

Scalar walk_sum_oracle(const ExactMatrix& a, int u, int v, int m,
                       const EnumerationLimits& limits) {
  if (m < 1) throw std::invalid_argument("oracle walk length must be positive");
  const WeightedDigraph g = digraph_of_matrix(a);
  Scalar sum;
  for (const Walk& l : enumerate_walks(g, u, v, m, limits)) {
    sum = sum + walk_weight(g, l);
  }
  return sum;
}

BijectionReport check_reversal_bijection(const ExactMatrix& a, const IdentityInstance& inst,
                                         const EnumerationLimits& limits) {
  const WeightedDigraph g = digraph_of_matrix(a);
  BijectionReport report;
  for (const Walk& l : closed_walk_family(a, inst, limits)) {
    ++report.walk_count;
    const std::vector<int> reversed = reverse_walk(l);
    if (!is_walk(g, reversed)) {
      report.reversals_valid = false;
      if (!report.first_violation) {
        report.first_violation = {l.vertices(), walk_weight(g, l), std::nullopt};
      }
      continue;
    }
    const Scalar wf = walk_weight(g, l);
    const Scalar wr = walk_weight(g, Walk::make(g, reversed));
    if (!(wf == wr)) {
      report.weights_equal = false;
      if (!report.first_violation) {
        report.first_violation = {l.vertices(), wf, wr};
      }
    }
  }
  return report;
}

}  // namespace matwalk
