#include "matwalk/genlab.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace matwalk {

DomainVariant domain_from_string(const std::string& s) {
  if (s == "integer") return DomainVariant::Integer;
  if (s == "rational") return DomainVariant::Rational;
  if (s == "symbolic") return DomainVariant::Symbolic;
  throw std::invalid_argument("unknown domain variant: " + s);
}

Scalar random_nonzero_integer(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(1, bound);
  std::uniform_int_distribution<int> coin(0, 1);
  const int v = dist(rng);
  return Scalar::integer(coin(rng) ? v : -v);
}

namespace {

Scalar random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> coin(0, 1);
  const int n = num(rng);
  return Scalar::rational(coin(rng) ? n : -n, den(rng));
}

// Random nonzero scalar of the requested numeric domain; symbolic entries
// are position-specific and handled by the callers.
Scalar random_nonzero(std::mt19937_64& rng, DomainVariant domain) {
  if (domain == DomainVariant::Rational) return random_nonzero_rational(rng);
  return random_nonzero_integer(rng);
}

Scalar entry(std::mt19937_64& rng, DomainVariant domain, VarId symbolic_id) {
  if (domain == DomainVariant::Symbolic) return Scalar::variable(symbolic_id);
  return random_nonzero(rng, domain);
}

}  // namespace

IdentityInstance random_instance(std::mt19937_64& rng, int n, int max_k, int max_m) {
  std::uniform_int_distribution<int> kd(1, max_k);
  std::uniform_int_distribution<int> md(1, max_m);
  std::uniform_int_distribution<int> id(1, n);
  IdentityInstance inst;
  const int k = kd(rng);
  for (int t = 0; t < k; ++t) {
    inst.exponents.push_back(md(rng));
    inst.indices.push_back(id(rng));
  }
  return inst;
}

ExactMatrix gen_tridiagonal(int n, uint64_t seed, DomainVariant domain) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::mt19937_64 rng(seed);
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (std::abs(i - j) <= 1) a.set(i, j, entry(rng, domain, {i, j}));
    }
  }
  return a;
}

ExactMatrix gen_family_one(int n, const std::vector<Scalar>& diagonal,
                                 const std::vector<std::vector<Scalar>>& block,
                                 const Scalar& b, const Scalar& c) {
  if (n < 2) throw std::invalid_argument("family one needs n >= 2");
  if (b.is_zero() || c.is_zero()) throw std::invalid_argument("b and c must be nonzero");
  if (static_cast<int>(diagonal.size()) != n) {
    throw std::invalid_argument("need n diagonal entries");
  }
  ExactMatrix a(n);
  a.set(1, 1, diagonal[0]);
  for (int j = 2; j <= n; ++j) {
    a.set(1, j, b);
    a.set(j, 1, c);
    a.set(j, j, diagonal[j - 1]);
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Scalar& v = block.at(i - 2).at(j - 2);
      if (v.is_zero()) throw std::invalid_argument("block entries must be nonzero");
      a.set(i, j, v);
      a.set(j, i, v);
    }
  }
  return a;
}

ExactMatrix gen_family_one(int n, uint64_t seed, DomainVariant domain) {
  std::mt19937_64 rng(seed);
  std::vector<Scalar> diagonal;
  for (int i = 1; i <= n; ++i) diagonal.push_back(entry(rng, domain, {i, i}));
  std::vector<std::vector<Scalar>> block(std::max(0, n - 1),
                                         std::vector<Scalar>(std::max(0, n - 1)));
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      block[i - 2][j - 2] = entry(rng, domain, {i, j});
    }
  }
  const Scalar b = entry(rng, domain, {0, 1});
  const Scalar c = entry(rng, domain, {1, 0});
  return gen_family_one(n, diagonal, block, b, c);
}

ExactMatrix gen_family_two(int n, const std::vector<Scalar>& row_one,
                                 const std::vector<Scalar>& col_one,
                                 const std::vector<Scalar>& diagonal,
                                 const Scalar& corner) {
  if (n < 3) throw std::invalid_argument("family two needs n >= 3");
  if (static_cast<int>(row_one.size()) != n - 2 ||
      static_cast<int>(col_one.size()) != n - 2 ||
      static_cast<int>(diagonal.size()) != n) {
    throw std::invalid_argument("family two parameter counts: n-2, n-2, n");
  }
  if (corner.is_zero()) throw std::invalid_argument("corner entry must be nonzero");
  for (const Scalar& s : row_one) {
    if (s.is_zero()) throw std::invalid_argument("row parameters must be nonzero");
  }
  for (const Scalar& s : col_one) {
    if (s.is_zero()) throw std::invalid_argument("column parameters must be nonzero");
  }
  ExactMatrix a(n);
  a.set(1, 1, diagonal[0]);
  a.set(n, n, diagonal[n - 1]);
  a.set(1, n, corner);
  a.set(n, 1, corner);
  for (int j = 2; j <= n - 1; ++j) {
    const Scalar& a1j = row_one[j - 2];
    const Scalar& aj1 = col_one[j - 2];
    a.set(1, j, a1j);
    a.set(n, j, a1j);
    a.set(j, 1, aj1);
    a.set(j, n, aj1);
    a.set(j, j, diagonal[j - 1]);
  }
  return a;
}

ExactMatrix gen_family_two(int n, uint64_t seed, DomainVariant domain) {
  std::mt19937_64 rng(seed);
  std::vector<Scalar> row_one, col_one, diagonal;
  for (int j = 2; j <= n - 1; ++j) row_one.push_back(entry(rng, domain, {1, j}));
  for (int j = 2; j <= n - 1; ++j) col_one.push_back(entry(rng, domain, {j, 1}));
  for (int i = 1; i <= n; ++i) diagonal.push_back(entry(rng, domain, {i, i}));
  const Scalar corner = entry(rng, domain, {n, 1});
  return gen_family_two(n, row_one, col_one, diagonal, corner);
}

ExactMatrix gen_rank_one_ratio(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  if (u.empty() || u.size() != v.size()) {
    throw std::invalid_argument("u and v must be nonempty and of equal length");
  }
  const int n = static_cast<int>(u.size());
  for (int i = 0; i < n; ++i) {
    if (u[i].is_zero() || v[i].is_zero()) {
      throw std::invalid_argument("vector components must be nonzero");
    }
  }
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) a.set(i, j, u[i - 1] * v[j - 1]);
  }
  return a;
}

ExactMatrix gen_rank_one_ratio(int n, uint64_t seed, DomainVariant domain) {
  std::mt19937_64 rng(seed);
  std::vector<Scalar> u, v;
  for (int i = 1; i <= n; ++i) u.push_back(entry(rng, domain, {i, 0}));
  for (int j = 1; j <= n; ++j) v.push_back(entry(rng, domain, {0, j}));
  return gen_rank_one_ratio(u, v);
}

ExactMatrix gen_random_acyclic(int n, uint64_t seed, double density, DomainVariant domain) {
  if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> pick(1, n);

  ExactMatrix a(n);
  const auto put = [&](int i, int j) { a.set(i, j, entry(rng, domain, {i, j})); };

  // Random forest: attach each vertex (in random order) to an earlier one
  // with probability `density`; forest edges become bidirected.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> comp(n + 1);
  for (int v = 1; v <= n; ++v) comp[v] = v;
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (int idx = 1; idx < n; ++idx) {
    if (!keep(rng)) continue;
    std::uniform_int_distribution<int> earlier(0, idx - 1);
    const int u = perm[idx];
    const int v = perm[earlier(rng)];
    comp[find(u)] = find(v);
    put(u, v);
    put(v, u);
  }

  // Random loops.
  for (int v = 1; v <= n; ++v) {
    if (keep(rng)) put(v, v);
  }

  // One-way edges only between distinct components, oriented along a fixed
  // topological order of component representatives, so no directed cycle of
  // length >= 3 can arise.
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (u == v || find(u) == find(v)) continue;
      if (find(u) < find(v) && keep(rng)) put(u, v);
    }
  }
  return a;
}

ExactMatrix gen_symmetric(int n, uint64_t seed, DomainVariant domain) {
  std::mt19937_64 rng(seed);
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const Scalar v = entry(rng, domain, {i, j});
      a.set(i, j, v);
      a.set(j, i, v);
    }
  }
  return a;
}

std::vector<std::pair<ExactMatrix, IdentityInstance>> gen_counterexample_suite() {
  std::vector<std::pair<ExactMatrix, IdentityInstance>> suite;

  // 3-cycle permutation matrix: lhs = 1, rhs = 0.
  ExactMatrix perm(3);
  perm.set(1, 2, Scalar::integer(1));
  perm.set(2, 3, Scalar::integer(1));
  perm.set(3, 1, Scalar::integer(1));
  suite.push_back({perm, IdentityInstance{{1, 1, 1}, {1, 2, 3}}});

  // Asymmetric triangle: lhs = 12, rhs = 5 for this pinned instance.
  const auto one = Scalar::integer(1);
  const auto two = Scalar::integer(2);
  ExactMatrix tri = ExactMatrix::from_rows({{one, two, one}, {one, one, two}, {two, one, one}});
  suite.push_back({tri, IdentityInstance{{1, 2}, {1, 2}}});

  return suite;
}

ExactMatrix generate(const GeneratorSpec& spec) {
  if (spec.family == "tridiagonal") return gen_tridiagonal(spec.n, spec.seed, spec.domain);
  if (spec.family == "family-one") return gen_family_one(spec.n, spec.seed, spec.domain);
  if (spec.family == "family-two") return gen_family_two(spec.n, spec.seed, spec.domain);
  if (spec.family == "rank-one") return gen_rank_one_ratio(spec.n, spec.seed, spec.domain);
  if (spec.family == "acyclic") {
    return gen_random_acyclic(spec.n, spec.seed, spec.density, spec.domain);
  }
  if (spec.family == "symmetric") return gen_symmetric(spec.n, spec.seed, spec.domain);
  throw std::invalid_argument("unknown generator family: " + spec.family);
}

}  // namespace matwalk
