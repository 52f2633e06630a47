#include <doctest.h>

#include <random>

#include "matwalk/genlab.hpp"
#include "matwalk/hypotheses.hpp"
#include "matwalk/verify.hpp"

using namespace matwalk;

namespace {

ExactMatrix ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& row : rows) {
    std::vector<Scalar> r;
    for (long v : row) r.push_back(Scalar::integer(v));
    s.push_back(std::move(r));
  }
  return ExactMatrix::from_rows(s);
}

}  // namespace

TEST_CASE("verify_identity basics") {
  std::mt19937_64 rng(1);
  const ExactMatrix a = gen_symmetric(4, 1, DomainVariant::Integer);
  // k = 1: both sides are the same diagonal entry.
  CHECK(verify_identity(a, {{4}, {3}}).equal);

  const ExactMatrix b = ints({{1, 2}, {3, 4}});
  const VerificationResult r = verify_identity(b, {{1, 2}, {1, 2}});
  CHECK(r.equal);
  CHECK(r.lhs == Scalar::integer(30));
  CHECK(r.rhs == Scalar::integer(30));

  const ExactMatrix perm = ints({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const VerificationResult bad = verify_identity(perm, {{1, 1, 1}, {1, 2, 3}});
  CHECK_FALSE(bad.equal);
  CHECK(bad.lhs == Scalar::integer(1));
  CHECK(bad.rhs == Scalar::integer(0));
}

TEST_CASE("closed walk families") {
  // No walk of length 1 from 1 to 3 on the path graph: family empty and
  // both sides zero.
  const ExactMatrix path = ints({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  const IdentityInstance none{{1, 1}, {1, 3}};
  CHECK(closed_walk_family(path, none).empty());
  const VerificationResult r = verify_identity(path, none);
  CHECK(r.lhs.is_zero());
  CHECK(r.rhs.is_zero());

  const IdentityInstance inst{{2, 2}, {1, 3}};
  const auto family = closed_walk_family(path, inst);
  REQUIRE(family.size() == 1);
  CHECK(family[0].vertices() == std::vector<int>{1, 2, 3, 2, 1});

  const ExactMatrix full2 = ints({{1, 2}, {3, 4}});
  const auto family2 = closed_walk_family(full2, {{1, 1}, {1, 2}});
  REQUIRE(family2.size() == 1);
  CHECK(family2[0].vertices() == std::vector<int>{1, 2, 1});
}

TEST_CASE("closed walk family respects limits") {
  const ExactMatrix big = gen_symmetric(9, 2, DomainVariant::Integer);
  CHECK_THROWS_AS(closed_walk_family(big, {{1}, {1}}), std::length_error);
  const ExactMatrix small = gen_symmetric(2, 3, DomainVariant::Integer);
  CHECK_THROWS_AS(closed_walk_family(small, {{7, 7}, {1, 2}}), std::length_error);
}

TEST_CASE("walk-sum oracle equals matrix powers") {
  const ExactMatrix path = ints({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK(walk_sum_oracle(path, 1, 3, 2) == Scalar::integer(1));
  CHECK(walk_sum_oracle(path, 1, 2, 1) == path(1, 2));

  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> value(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    ExactMatrix a(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) a.set(i, j, Scalar::integer(value(rng)));
    for (int m = 1; m <= 6; ++m) {
      const ExactMatrix p = mat_pow(a, static_cast<unsigned>(m));
      for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) CHECK(walk_sum_oracle(a, u, v, m) == p(u, v));
    }
  }
}

TEST_CASE("identity sides equal the walk sums of the family and its reversals") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix a = gen_random_acyclic(5, rng(), 0.6);
    const WeightedDigraph g = digraph_of_matrix(a);
    const IdentityInstance inst = random_instance(rng, 5, 3, 3);
    const VerificationResult r = verify_identity(a, inst);

    Scalar lhs_sum, rhs_sum;
    for (const Walk& l : closed_walk_family(a, inst)) {
      lhs_sum = lhs_sum + walk_weight(g, l);
      const auto reversed = reverse_walk(l);
      REQUIRE(is_walk(g, reversed));
      rhs_sum = rhs_sum + walk_weight(g, Walk::make(g, reversed));
    }
    CHECK(r.lhs == lhs_sum);
    CHECK(r.rhs == rhs_sum);
  }
}

TEST_CASE("reversal bijection under the acyclicity hypothesis") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 25; ++trial) {
    const ExactMatrix a = gen_random_acyclic(5, rng(), 0.5);
    const BijectionReport r = check_reversal_bijection(a, random_instance(rng, 5, 3, 3));
    CHECK(r.reversals_valid);
    CHECK(r.weights_equal);
  }
}

TEST_CASE("reversal bijection under the triangle hypothesis") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 25; ++trial) {
    const ExactMatrix a = gen_rank_one_ratio(4, rng(), DomainVariant::Integer);
    REQUIRE(check_triangle_condition(a).status == HypStatus::Holds);
    const BijectionReport r = check_reversal_bijection(a, random_instance(rng, 4, 3, 2));
    CHECK(r.reversals_valid);
    CHECK(r.weights_equal);
  }
}

TEST_CASE("reversal bijection fails on the permutation counterexample") {
  const ExactMatrix perm = ints({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const BijectionReport r = check_reversal_bijection(perm, {{1, 1, 1}, {1, 2, 3}});
  CHECK_FALSE(r.reversals_valid);
  REQUIRE(r.first_violation.has_value());
  CHECK(r.first_violation->walk == std::vector<int>{1, 2, 3, 1});
}

TEST_CASE("loops never change per-walk weight equality") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 15; ++trial) {
    ExactMatrix a = gen_random_acyclic(4, rng(), 0.7);
    // Force loops everywhere; loops contribute identically to a walk and
    // its reverse.
    for (int v = 1; v <= 4; ++v) {
      if (a(v, v).is_zero()) a.set(v, v, random_nonzero_integer(rng));
    }
    const BijectionReport r = check_reversal_bijection(a, random_instance(rng, 4, 3, 3));
    CHECK(r.reversals_valid);
    CHECK(r.weights_equal);
  }
}

TEST_CASE("symbolic acyclic matrices satisfy the identity as polynomials") {
  std::mt19937_64 rng(93);
  for (int trial = 0; trial < 10; ++trial) {
    const ExactMatrix a = gen_random_acyclic(4, rng(), 0.6, DomainVariant::Symbolic);
    IdentityInstance inst = random_instance(rng, 4, 3, 2);
    const VerificationResult r = verify_identity(a, inst);
    CHECK(r.equal);
  }
}
