#include <doctest.h>

#include <random>

#include "matwalk/digraph.hpp"
#include "matwalk/genlab.hpp"
#include "matwalk/hypotheses.hpp"
#include "matwalk/verify.hpp"

using namespace matwalk;

TEST_CASE("generators are deterministic in the seed") {
  const std::vector<std::string> families = {"tridiagonal", "family-one", "family-two",
                                             "rank-one",    "acyclic",    "symmetric"};
  for (const auto& family : families) {
    GeneratorSpec spec;
    spec.family = family;
    spec.n = 5;
    spec.seed = 424242;
    const ExactMatrix a = generate(spec);
    const ExactMatrix b = generate(spec);
    CHECK(a == b);
    spec.seed = 424243;
    CHECK_FALSE(generate(spec) == a);
  }
}

TEST_CASE("domain parsing") {
  CHECK(domain_from_string("integer") == DomainVariant::Integer);
  CHECK(domain_from_string("rational") == DomainVariant::Rational);
  CHECK(domain_from_string("symbolic") == DomainVariant::Symbolic);
  CHECK_THROWS_AS(domain_from_string("real"), std::invalid_argument);
}

TEST_CASE("tridiagonal matrices have a forest pattern") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const ExactMatrix a = gen_tridiagonal(6, seed, DomainVariant::Integer);
    for (int i = 1; i <= 6; ++i) {
      for (int j = 1; j <= 6; ++j) {
        if (std::abs(i - j) <= 1) {
          CHECK_FALSE(a(i, j).is_zero());
        } else {
          CHECK(a(i, j).is_zero());
        }
      }
    }
    CHECK(check_acyclic_matrix(a).status == HypStatus::Holds);
  }
}

TEST_CASE("family one has the bordered-symmetric shape") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const ExactMatrix a = gen_family_one(5, seed, DomainVariant::Integer);
    const Scalar b = a(1, 2);
    const Scalar c = a(2, 1);
    for (int j = 2; j <= 5; ++j) {
      CHECK(a(1, j) == b);
      CHECK(a(j, 1) == c);
    }
    for (int i = 2; i <= 5; ++i)
      for (int j = 2; j <= 5; ++j) CHECK(a(i, j) == a(j, i));
    CHECK(check_triangle_condition(a).status == HypStatus::Holds);
  }
}

TEST_CASE("family one identity holds symbolically") {
  const ExactMatrix a = gen_family_one(4, 31, DomainVariant::Symbolic);
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 5; ++trial) {
    CHECK(verify_identity(a, random_instance(rng, 4, 3, 4)).equal);
  }
}

TEST_CASE("family two has the bordered three-column shape") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const int n = 5;
    const ExactMatrix a = gen_family_two(n, seed, DomainVariant::Integer);
    CHECK(a(1, n) == a(n, 1));
    for (int j = 2; j <= n - 1; ++j) {
      CHECK_FALSE(a(1, j).is_zero());
      CHECK_FALSE(a(j, 1).is_zero());
      CHECK(a(n, j) == a(1, j));
      CHECK(a(j, n) == a(j, 1));
      for (int i = 2; i <= n - 1; ++i) {
        if (i != j) CHECK(a(i, j).is_zero());
      }
    }
    const CertificateSearchResult r = search_certificate(a);
    CHECK(r.found);
  }
}

TEST_CASE("family two identity holds symbolically") {
  const ExactMatrix a = gen_family_two(4, 33, DomainVariant::Symbolic);
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 5; ++trial) {
    CHECK(verify_identity(a, random_instance(rng, 4, 3, 4)).equal);
  }
}

TEST_CASE("rank-one matrices satisfy the triangle condition") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const ExactMatrix a = gen_rank_one_ratio(5, seed, DomainVariant::Rational);
    CHECK(check_triangle_condition(a).status == HypStatus::Holds);
  }
  // Explicit vectors: entries are exactly the products.
  const std::vector<Scalar> u = {Scalar::integer(2), Scalar::integer(3)};
  const std::vector<Scalar> v = {Scalar::integer(5), Scalar::integer(7)};
  const ExactMatrix a = gen_rank_one_ratio(u, v);
  CHECK(a(1, 1) == Scalar::integer(10));
  CHECK(a(1, 2) == Scalar::integer(14));
  CHECK(a(2, 1) == Scalar::integer(15));
  CHECK(a(2, 2) == Scalar::integer(21));
}

TEST_CASE("random acyclic matrices are structurally acyclic") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    const double density = 0.2 + 0.1 * (trial % 7);
    const ExactMatrix a = gen_random_acyclic(n, rng(), density);
    CHECK(is_acyclic(digraph_of_matrix(a)).acyclic);
  }
}

TEST_CASE("symmetric matrices are symmetric with no zero entries") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const ExactMatrix a = gen_symmetric(5, seed, DomainVariant::Integer);
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        CHECK(a(i, j) == a(j, i));
        CHECK_FALSE(a(i, j).is_zero());
      }
    }
    CHECK(check_triangle_condition(a).status == HypStatus::Holds);
  }
}

TEST_CASE("counterexample suite violates the identity") {
  const auto suite = gen_counterexample_suite();
  REQUIRE(suite.size() >= 2);
  for (const auto& [matrix, inst] : suite) {
    CHECK_FALSE(verify_identity(matrix, inst).equal);
  }
  // Pinned values for the first entry (3-cycle permutation matrix).
  const VerificationResult r = verify_identity(suite[0].first, suite[0].second);
  CHECK(r.lhs == Scalar::integer(1));
  CHECK(r.rhs == Scalar::integer(0));
  // Second entry: lhs = A_{12} (A^2)_{21} = 2*6, rhs = A_{21} (A^2)_{12} = 1*5.
  const VerificationResult r2 = verify_identity(suite[1].first, suite[1].second);
  CHECK(r2.lhs == Scalar::integer(12));
  CHECK(r2.rhs == Scalar::integer(5));
}

TEST_CASE("random helpers stay in range") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 200; ++i) {
    const Scalar s = random_nonzero_integer(rng, 5);
    CHECK_FALSE(s.is_zero());
  }
  for (int i = 0; i < 100; ++i) {
    const IdentityInstance inst = random_instance(rng, 4, 3, 5);
    CHECK_NOTHROW(inst.validate(4));
    CHECK(inst.exponents.size() <= 3);
    for (int m : inst.exponents) {
      CHECK(m >= 1);
      CHECK(m <= 5);
    }
  }
}

TEST_CASE("generator spec validation") {
  GeneratorSpec spec;
  spec.family = "unknown";
  CHECK_THROWS_AS(generate(spec), std::invalid_argument);
  spec.family = "symmetric";
  spec.n = 0;
  CHECK_THROWS_AS(generate(spec), std::invalid_argument);
}
