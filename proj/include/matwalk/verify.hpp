#pragma once

#include <optional>
#include <vector>

#include "matwalk/digraph.hpp"
#include "matwalk/matrix.hpp"

namespace matwalk {

struct VerificationResult {
  IdentityInstance instance;
  Scalar lhs;
  Scalar rhs;
  bool equal;
};

// Both sides of the cyclic identity via matrix powers; the walk oracle
// below is the independent cross-check and shares no multiplication path
// with this.
VerificationResult verify_identity(const ExactMatrix& a, const IdentityInstance& inst);

// All closed walks L_1 L_2 .. L_k where L_t is a length-m_t walk from i_t
// to i_{t+1}; deterministic lexicographic order.
std::vector<Walk> closed_walk_family(const ExactMatrix& a, const IdentityInstance& inst,
                                     const EnumerationLimits& limits = {});

// Sum of walk weights over all length-m walks u -> v; equals (A^m)_{uv}.
Scalar walk_sum_oracle(const ExactMatrix& a, int u, int v, int m,
                       const EnumerationLimits& limits = {});

struct BijectionViolation {
  std::vector<int> walk;
  Scalar forward_weight;
  std::optional<Scalar> reverse_weight;  // absent when the reverse is not a walk
};

struct BijectionReport {
  size_t walk_count = 0;
  bool reversals_valid = true;
  bool weights_equal = true;
  std::optional<BijectionViolation> first_violation;
};

// Tests, for every walk in the closed walk family, that its reverse is a
// walk and carries the same weight.
BijectionReport check_reversal_bijection(const ExactMatrix& a, const IdentityInstance& inst,
                                         const EnumerationLimits& limits = {});

}  // namespace matwalk
