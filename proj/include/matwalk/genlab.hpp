#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matwalk/matrix.hpp"

namespace matwalk {

enum class DomainVariant { Integer, Rational, Symbolic };

DomainVariant domain_from_string(const std::string& s);

// Deterministic generator request: same spec, same matrix.
struct GeneratorSpec {
  std::string family;  // tridiagonal | family-one | family-two | rank-one |
                       // acyclic | symmetric
  int n = 3;
  uint64_t seed = 0;
  DomainVariant domain = DomainVariant::Integer;
  double density = 0.5;  // acyclic family only
};

ExactMatrix generate(const GeneratorSpec& spec);

ExactMatrix gen_tridiagonal(int n, uint64_t seed, DomainVariant domain);

// Bordered family: row 1 constant b off-diagonal, column 1 constant c,
// trailing block symmetric.
ExactMatrix gen_family_one(int n, const std::vector<Scalar>& diagonal,
                                 const std::vector<std::vector<Scalar>>& block,
                                 const Scalar& b, const Scalar& c);
ExactMatrix gen_family_one(int n, uint64_t seed, DomainVariant domain);

// Sparse bordered family: interior row j has nonzeros only at columns 1, j, n
// with the (j, n) entry tied to the (j, 1) entry; row n repeats row 1's
// off-diagonal entries and the two corner entries are both a_{n1}.
ExactMatrix gen_family_two(int n, const std::vector<Scalar>& row_one,
                                 const std::vector<Scalar>& col_one,
                                 const std::vector<Scalar>& diagonal,
                                 const Scalar& corner);
ExactMatrix gen_family_two(int n, uint64_t seed, DomainVariant domain);

// A_{ij} = u_i * v_j; satisfies the triangle condition identically.
ExactMatrix gen_rank_one_ratio(const std::vector<Scalar>& u, const std::vector<Scalar>& v);
ExactMatrix gen_rank_one_ratio(int n, uint64_t seed, DomainVariant domain);

// Random acyclic matrix: bidirected random forest with independent weights,
// random loops, plus one-way edges between components following a fixed
// topological order.
ExactMatrix gen_random_acyclic(int n, uint64_t seed, double density,
                               DomainVariant domain = DomainVariant::Integer);

// Symmetric matrix with all entries nonzero.
ExactMatrix gen_symmetric(int n, uint64_t seed, DomainVariant domain);

// Fixed negative controls: each entry violates the identity and fails all
// three hypothesis checkers.
std::vector<std::pair<ExactMatrix, IdentityInstance>> gen_counterexample_suite();

// Nonzero random integer scalar in [-bound, bound].
Scalar random_nonzero_integer(std::mt19937_64& rng, int bound = 9);

// Random identity instance: k in 1..max_k, exponents in 1..max_m, indices
// uniform over 1..n with repetition.
IdentityInstance random_instance(std::mt19937_64& rng, int n, int max_k = 4, int max_m = 6);

}  // namespace matwalk
