#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "matwalk/digraph.hpp"
#include "matwalk/scalar.hpp"

namespace matwalk {

// Canonical (unsigned) simplex: sorted list of distinct vertices.
using Simplex = std::vector<int>;

// Oriented simplex stored canonically as the sorted vertex list plus the
// parity of the permutation that sorts the given tuple.
struct OrientedSimplex {
  Simplex vertices;  // sorted, distinct
  int sign;          // +1 or -1

  // Builds from an arbitrary vertex ordering; an odd permutation flips sign.
  static OrientedSimplex from_tuple(const std::vector<int>& tuple);

  OrientedSimplex negated() const { return {vertices, -sign}; }
  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
};

// Abstract simplicial complex; downward closure validated at construction.
class SimplicialComplex {
 public:
  SimplicialComplex(std::set<int> vertices, std::set<Simplex> faces);

  // The full q-skeleton of the simplex on vertices 1..n.
  static SimplicialComplex full_skeleton(int n, int max_dim);
  // The complete graph K_n as a 1-dimensional complex.
  static SimplicialComplex complete_graph(int n) { return full_skeleton(n, 1); }

  bool contains(const Simplex& s) const { return faces_.count(s) > 0; }
  const std::set<Simplex>& faces() const { return faces_; }

 private:
  std::set<int> vertices_;
  std::set<Simplex> faces_;
};

// Formal Z-linear combination of canonically oriented q-simplices.
// No zero coefficients; orientation signs are folded into coefficients.
class Chain {
 public:
  explicit Chain(int q) : q_(q) {}

  static Chain of(const OrientedSimplex& s, mpz_class coeff = 1);
  static Chain from_terms(int q, const std::vector<std::pair<std::vector<int>, mpz_class>>& tuples);

  int dimension() const { return q_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Simplex, mpz_class>& terms() const { return terms_; }
  mpz_class coefficient(const Simplex& s) const;

  void add_term(const OrientedSimplex& s, const mpz_class& coeff);

  Chain operator+(const Chain& o) const;
  Chain operator-() const;
  Chain operator-(const Chain& o) const { return *this + (-o); }
  Chain scaled(const mpz_class& k) const;

  bool operator==(const Chain& o) const { return q_ == o.q_ && terms_ == o.terms_; }

 private:
  int q_;
  std::map<Simplex, mpz_class> terms_;
};

// Total weight function f on oriented simplices; f(s) and f(-s) are
// independent nonzero values.
class WeightSystem {
 public:
  void set(const Simplex& s, Scalar positive, Scalar negative);
  Scalar value(const Simplex& s, int sign) const;
  bool defined(const Simplex& s) const { return f_.count(s) > 0; }

  // f([i,j]) = A_{ij} on the 1-simplices of K_n whose entries both ways
  // are nonzero.
  static WeightSystem from_matrix(const ExactMatrix& a);

 private:
  std::map<Simplex, std::pair<Scalar, Scalar>> f_;
};

// Ordered sequence of (nonzero coefficient, oriented simplex) pairs;
// entries may repeat and order matters.
using SimplexSequence = std::vector<std::pair<mpz_class, OrientedSimplex>>;

SimplexSequence negate_sequence(const SimplexSequence& gamma);
Chain sequence_sum(int q, const SimplexSequence& gamma);

Chain boundary(const Chain& c);
bool is_cycle(const Chain& c);

// W(c) = prod_n f(sign(a_n) * sigma_n)^{|a_n|}; W(0) = 1.
Scalar chain_weight(const WeightSystem& f, const Chain& c);

// Sequence weight: prod_i f(sign(b_i) * sigma_i)^{|b_i|}. Sensitive to
// cancellations that the chain weight forgets.
Scalar sequence_weight(const WeightSystem& f, const SimplexSequence& gamma);

// Outcome of an executable theorem check. A hypothesis violation is a
// distinct state, never a silent pass.
struct TheoremCheckReport {
  bool hypothesis_holds = false;
  int failing_hypothesis_index = -1;
  bool conclusion_holds = false;
  Scalar lhs;
  Scalar rhs;
};

// Checks: if W(c_i) = W(-c_i) for all i then W(S) = W(-S) for
// S = sum_i s_i c_i.
TheoremCheckReport check_chain_weight_symmetry(const WeightSystem& f,
                                const std::vector<mpz_class>& coeffs,
                                const std::vector<Chain>& chains);

// Checks: if W(g) = W(-g) for the summed chain g then the sequence weights
// of Gamma and -Gamma agree.
TheoremCheckReport check_sequence_weight_symmetry(const WeightSystem& f, int q,
                                 const SimplexSequence& gamma);

int cycle_space_rank(const UndirectedGraph& ug);

struct FundamentalBasis {
  std::vector<Chain> chains;                     // one per non-tree edge
  std::vector<std::pair<int, int>> nontree_edges;  // (u, v) with u < v
  std::vector<std::vector<int>> vertex_cycles;   // directed form u -> v -> tree path -> u
};

// Spanning-forest (BFS from the least vertex of each component) cycle basis.
FundamentalBasis fundamental_cycle_basis_full(const UndirectedGraph& ug);
std::vector<Chain> fundamental_cycle_basis(const UndirectedGraph& ug);

// Same construction over an arbitrary spanning forest chosen by shuffling
// the edge order with the given seed.
FundamentalBasis random_spanning_tree_basis(const UndirectedGraph& ug, uint64_t seed);

// The triangles [i,j] + [j,j+1] + [j+1,i], 1 <= i < j <= n-1, on K_n.
std::vector<Chain> kn_triangle_basis(int n);

// Integer coordinates of the cycle c in the given basis of cycles, or
// nullopt when no integer solution exists.
std::optional<std::vector<mpz_class>> express_in_basis(const Chain& c,
                                                       const std::vector<Chain>& basis);

// True iff the candidate chains are cycles, match the cycle-space rank, and
// the change-of-basis matrix from the fundamental cycle basis has
// determinant +-1.
bool is_z_basis(const UndirectedGraph& ug, const std::vector<Chain>& candidate);

// Bareiss determinant of a square integer matrix.
mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m);

// The 1-chain of a vertex cycle v_0, .., v_{r-1} (closing edge implied),
// and the sequence of its steps. Loop steps are not allowed.
Chain chain_of_vertex_cycle(const std::vector<int>& cycle);
SimplexSequence sequence_of_vertex_path(const std::vector<int>& path);

}  // namespace matwalk
