#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matwalk/digraph.hpp"
#include "matwalk/homology.hpp"
#include "matwalk/matrix.hpp"

namespace matwalk {

enum class HypStatus { Holds, Fails, NotApplicable };

std::string to_string(HypStatus s);

// Set of directed cycles (length >= 3, distinct vertices) intended to form
// a Z-basis of the cycle space of the underlying graph. Each cycle is
// stored as v_0..v_{r-1}; the closing edge is implied.
struct CycleBasisCertificate {
  std::vector<std::vector<int>> cycles;
};

struct AcyclicReport {
  HypStatus status;
  std::optional<std::vector<int>> witness_cycle;
};

struct TriangleReport {
  HypStatus status;
  // Witness: either a zero entry or the first (i, j) pair whose triple
  // products differ.
  std::optional<std::pair<int, int>> zero_entry;
  std::optional<std::pair<int, int>> violating_pair;
};

struct CertificateReport {
  HypStatus status;
  std::string reason;  // empty when the certificate holds
  std::optional<std::pair<int, int>> asymmetric_pair;
  std::optional<std::vector<int>> failing_cycle;
};

struct CertificateSearchResult {
  bool found;
  CycleBasisCertificate certificate;          // when found
  std::optional<std::vector<int>> failing_cycle;  // fundamental cycle with ratio != 1
  bool pattern_symmetric = true;
};

AcyclicReport check_acyclic_matrix(const ExactMatrix& a);

// Triangle condition: all entries nonzero and
// A_{ij} A_{j,j+1} A_{j+1,i} = A_{ji} A_{j+1,j} A_{i,j+1} for
// 1 <= i < j <= n-1, checked literally for that index family.
TriangleReport check_triangle_condition(const ExactMatrix& a);

// Formal quotient w(c) / w(reverse of c) for a directed vertex cycle.
Ratio cycle_ratio(const ExactMatrix& a, const std::vector<int>& cycle);

CertificateReport check_certificate(const ExactMatrix& a,
                                    const CycleBasisCertificate& cert);

// Searches via the fundamental cycle basis of the underlying graph. The
// per-cycle ratio map is a homomorphism on the cycle space, so checking
// one basis decides every basis.
CertificateSearchResult search_certificate(const ExactMatrix& a);

// Aggregate of the three hypothesis deciders. The certificate flag comes
// from search_certificate and is NotApplicable when the zero pattern is
// asymmetric.
struct HypothesisReport {
  AcyclicReport acyclic;
  TriangleReport triangle;
  CertificateReport certificate;
  std::optional<CycleBasisCertificate> found_certificate;

  bool any_holds() const {
    return acyclic.status == HypStatus::Holds || triangle.status == HypStatus::Holds ||
           certificate.status == HypStatus::Holds;
  }
};

HypothesisReport check_all_hypotheses(const ExactMatrix& a);

}  // namespace matwalk
