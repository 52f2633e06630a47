#include "matwalk/homology.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>

namespace matwalk {

OrientedSimplex OrientedSimplex::from_tuple(const std::vector<int>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("simplex needs at least one vertex");
  std::vector<int> sorted = tuple;
  // Parity of the sorting permutation by counting inversions.
  int inversions = 0;
  for (size_t i = 0; i < tuple.size(); ++i) {
    for (size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] > tuple[j]) ++inversions;
      if (tuple[i] == tuple[j]) throw std::invalid_argument("simplex vertices must be distinct");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  return {std::move(sorted), inversions % 2 == 0 ? 1 : -1};
}

SimplicialComplex::SimplicialComplex(std::set<int> vertices, std::set<Simplex> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  for (const Simplex& s : faces_) {
    if (s.empty() || !std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument("face must be a sorted set of distinct vertices");
    }
    for (int v : s) {
      if (!vertices_.count(v)) throw std::invalid_argument("face uses unknown vertex");
    }
    if (s.size() > 1) {
      for (size_t skip = 0; skip < s.size(); ++skip) {
        Simplex sub;
        for (size_t i = 0; i < s.size(); ++i) {
          if (i != skip) sub.push_back(s[i]);
        }
        if (!faces_.count(sub)) {
          throw std::invalid_argument("face set is not downward closed");
        }
      }
    }
  }
}

SimplicialComplex SimplicialComplex::full_skeleton(int n, int max_dim) {
  std::set<int> vertices;
  for (int i = 1; i <= n; ++i) vertices.insert(i);
  std::set<Simplex> faces;
  // All subsets of size 1..max_dim+1.
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int next) {
    if (!cur.empty()) faces.insert(cur);
    if (static_cast<int>(cur.size()) == max_dim + 1) return;
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      gen(v + 1);
      cur.pop_back();
    }
  };
  gen(1);
  return SimplicialComplex(std::move(vertices), std::move(faces));
}

Chain Chain::of(const OrientedSimplex& s, mpz_class coeff) {
  Chain c(s.dimension());
  c.add_term(s, coeff);
  return c;
}

Chain Chain::from_terms(int q,
                        const std::vector<std::pair<std::vector<int>, mpz_class>>& tuples) {
  Chain c(q);
  for (const auto& [tuple, coeff] : tuples) {
    OrientedSimplex s = OrientedSimplex::from_tuple(tuple);
    if (s.dimension() != q) throw std::invalid_argument("chain term has wrong dimension");
    c.add_term(s, coeff);
  }
  return c;
}

mpz_class Chain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Chain::add_term(const OrientedSimplex& s, const mpz_class& coeff) {
  if (s.dimension() != q_) throw std::invalid_argument("term dimension mismatch");
  if (coeff == 0) return;
  auto it = terms_.find(s.vertices);
  if (it == terms_.end()) {
    terms_[s.vertices] = coeff * s.sign;
  } else {
    it->second += coeff * s.sign;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain Chain::operator+(const Chain& o) const {
  if (q_ != o.q_) throw std::invalid_argument("chain dimension mismatch");
  Chain r = *this;
  for (const auto& [s, a] : o.terms_) {
    auto it = r.terms_.find(s);
    if (it == r.terms_.end()) {
      r.terms_[s] = a;
    } else {
      it->second += a;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Chain Chain::operator-() const {
  Chain r = *this;
  for (auto& [s, a] : r.terms_) a = -a;
  return r;
}

Chain Chain::scaled(const mpz_class& k) const {
  Chain r(q_);
  if (k == 0) return r;
  r.terms_ = terms_;
  for (auto& [s, a] : r.terms_) a *= k;
  return r;
}

void WeightSystem::set(const Simplex& s, Scalar positive, Scalar negative) {
  if (positive.is_zero() || negative.is_zero()) {
    throw std::invalid_argument("weight system values must be nonzero");
  }
  f_[s] = {std::move(positive), std::move(negative)};
}

Scalar WeightSystem::value(const Simplex& s, int sign) const {
  auto it = f_.find(s);
  if (it == f_.end()) throw std::out_of_range("weight system undefined on simplex");
  return sign >= 0 ? it->second.first : it->second.second;
}

WeightSystem WeightSystem::from_matrix(const ExactMatrix& a) {
  WeightSystem f;
  for (int i = 1; i <= a.order(); ++i) {
    for (int j = i + 1; j <= a.order(); ++j) {
      if (!a(i, j).is_zero() && !a(j, i).is_zero()) {
        f.set({i, j}, a(i, j), a(j, i));
      }
    }
  }
  return f;
}

SimplexSequence negate_sequence(const SimplexSequence& gamma) {
  SimplexSequence out;
  out.reserve(gamma.size());
  for (const auto& [b, s] : gamma) out.push_back({-b, s});
  return out;
}

Chain sequence_sum(int q, const SimplexSequence& gamma) {
  Chain g(q);
  for (const auto& [b, s] : gamma) g.add_term(s, b);
  return g;
}

Chain boundary(const Chain& c) {
  if (c.dimension() < 1) throw std::invalid_argument("boundary needs dimension >= 1");
  Chain out(c.dimension() - 1);
  for (const auto& [s, a] : c.terms()) {
    for (size_t skip = 0; skip < s.size(); ++skip) {
      Simplex face;
      for (size_t i = 0; i < s.size(); ++i) {
        if (i != skip) face.push_back(s[i]);
      }
      const int face_sign = skip % 2 == 0 ? 1 : -1;
      out.add_term({std::move(face), 1}, a * face_sign);
    }
  }
  return out;
}

bool is_cycle(const Chain& c) {
  if (c.dimension() < 1) throw std::invalid_argument("cycles need dimension >= 1");
  return boundary(c).is_zero();
}

Scalar chain_weight(const WeightSystem& f, const Chain& c) {
  Scalar w = Scalar::integer(1);
  for (const auto& [s, a] : c.terms()) {
    const int sign = a > 0 ? 1 : -1;
    const unsigned exp = static_cast<unsigned>(mpz_class(abs(a)).get_ui());
    w = w * f.value(s, sign).pow(exp);
  }
  return w;
}

Scalar sequence_weight(const WeightSystem& f, const SimplexSequence& gamma) {
  Scalar w = Scalar::integer(1);
  for (const auto& [b, s] : gamma) {
    if (b == 0) throw std::invalid_argument("sequence coefficients must be nonzero");
    const int sign = (b > 0 ? 1 : -1) * s.sign;
    const unsigned exp = static_cast<unsigned>(mpz_class(abs(b)).get_ui());
    w = w * f.value(s.vertices, sign).pow(exp);
  }
  return w;
}

TheoremCheckReport check_chain_weight_symmetry(const WeightSystem& f,
                                const std::vector<mpz_class>& coeffs,
                                const std::vector<Chain>& chains) {
  if (coeffs.size() != chains.size()) {
    throw std::invalid_argument("coefficient/chain count mismatch");
  }
  TheoremCheckReport report;
  for (size_t i = 0; i < chains.size(); ++i) {
    if (coeffs[i] == 0) throw std::invalid_argument("coefficients must be nonzero");
    if (!(chain_weight(f, chains[i]) == chain_weight(f, -chains[i]))) {
      report.failing_hypothesis_index = static_cast<int>(i);
      return report;
    }
  }
  report.hypothesis_holds = true;
  const int q = chains.empty() ? 0 : chains.front().dimension();
  Chain sum(q);
  for (size_t i = 0; i < chains.size(); ++i) sum = sum + chains[i].scaled(coeffs[i]);
  report.lhs = chain_weight(f, sum);
  report.rhs = chain_weight(f, -sum);
  report.conclusion_holds = report.lhs == report.rhs;
  return report;
}

TheoremCheckReport check_sequence_weight_symmetry(const WeightSystem& f, int q,
                                 const SimplexSequence& gamma) {
  TheoremCheckReport report;
  const Chain g = sequence_sum(q, gamma);
  if (!(chain_weight(f, g) == chain_weight(f, -g))) {
    report.failing_hypothesis_index = 0;
    return report;
  }
  report.hypothesis_holds = true;
  report.lhs = sequence_weight(f, gamma);
  report.rhs = sequence_weight(f, negate_sequence(gamma));
  report.conclusion_holds = report.lhs == report.rhs;
  return report;
}

namespace {

int component_count(const UndirectedGraph& ug) {
  std::vector<int> parent(ug.n + 1);
  for (int i = 0; i <= ug.n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  int components = ug.n;
  for (const auto& [u, v] : ug.edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

FundamentalBasis basis_from_edge_order(const UndirectedGraph& ug,
                                       const std::vector<std::pair<int, int>>& order) {
  std::vector<int> parent(ug.n + 1);
  for (int i = 0; i <= ug.n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };

  std::vector<std::vector<int>> tree_adj(ug.n + 1);
  std::vector<std::pair<int, int>> nontree;
  for (const auto& [u, v] : order) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      tree_adj[u].push_back(v);
      tree_adj[v].push_back(u);
    } else {
      nontree.push_back({u, v});
    }
  }

  FundamentalBasis basis;
  for (const auto& [u, v] : nontree) {
    // Tree path from v back to u, then close with the non-tree edge (u, v).
    std::vector<int> prev(ug.n + 1, 0);
    std::deque<int> queue{v};
    prev[v] = v;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (x == u) break;
      for (int y : tree_adj[x]) {
        if (prev[y] == 0) {
          prev[y] = x;
          queue.push_back(y);
        }
      }
    }
    // prev pointers lead from u back towards v; orient the cycle
    // u -> v -> (interior of the tree path) -> u.
    std::vector<int> tree_path{u};
    while (tree_path.back() != v) tree_path.push_back(prev[tree_path.back()]);
    std::vector<int> cycle{u, v};
    for (size_t i = tree_path.size() - 1; i-- > 1;) cycle.push_back(tree_path[i]);
    basis.vertex_cycles.push_back(cycle);
    basis.nontree_edges.push_back({std::min(u, v), std::max(u, v)});
    basis.chains.push_back(chain_of_vertex_cycle(cycle));
  }
  return basis;
}

}  // namespace

int cycle_space_rank(const UndirectedGraph& ug) {
  return static_cast<int>(ug.edges.size()) - ug.n + component_count(ug);
}

FundamentalBasis fundamental_cycle_basis_full(const UndirectedGraph& ug) {
  std::vector<std::pair<int, int>> order(ug.edges.begin(), ug.edges.end());
  return basis_from_edge_order(ug, order);
}

std::vector<Chain> fundamental_cycle_basis(const UndirectedGraph& ug) {
  return fundamental_cycle_basis_full(ug).chains;
}

FundamentalBasis random_spanning_tree_basis(const UndirectedGraph& ug, uint64_t seed) {
  std::vector<std::pair<int, int>> order(ug.edges.begin(), ug.edges.end());
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return basis_from_edge_order(ug, order);
}

std::vector<Chain> kn_triangle_basis(int n) {
  if (n < 3) throw std::invalid_argument("kn_triangle_basis needs n >= 3");
  std::vector<Chain> basis;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      Chain c(1);
      c.add_term(OrientedSimplex::from_tuple({i, j}), 1);
      c.add_term(OrientedSimplex::from_tuple({j, j + 1}), 1);
      c.add_term(OrientedSimplex::from_tuple({j + 1, i}), 1);
      basis.push_back(std::move(c));
    }
  }
  return basis;
}

std::optional<std::vector<mpz_class>> express_in_basis(const Chain& c,
                                                       const std::vector<Chain>& basis) {
  if (!is_cycle(c)) throw std::invalid_argument("express_in_basis needs a cycle");
  for (const Chain& b : basis) {
    if (!is_cycle(b)) throw std::invalid_argument("basis chains must be cycles");
  }
  // Collect every simplex appearing anywhere.
  std::set<Simplex> support;
  for (const auto& [s, a] : c.terms()) support.insert(s);
  for (const Chain& b : basis) {
    for (const auto& [s, a] : b.terms()) support.insert(s);
  }
  std::vector<Simplex> rows(support.begin(), support.end());
  const size_t nrows = rows.size();
  const size_t ncols = basis.size();

  // Rational Gaussian elimination on [M | c].
  std::vector<std::vector<mpq_class>> m(nrows, std::vector<mpq_class>(ncols + 1));
  for (size_t r = 0; r < nrows; ++r) {
    for (size_t col = 0; col < ncols; ++col) m[r][col] = basis[col].coefficient(rows[r]);
    m[r][ncols] = c.coefficient(rows[r]);
  }
  std::vector<int> pivot_col_of_row;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t p = row;
    while (p < nrows && m[p][col] == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[row]);
    for (size_t r = 0; r < nrows; ++r) {
      if (r != row && m[r][col] != 0) {
        mpq_class factor = m[r][col] / m[row][col];
        for (size_t cc = col; cc <= ncols; ++cc) m[r][cc] -= factor * m[row][cc];
      }
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }
  // Inconsistent rows mean c is outside the span.
  for (size_t r = row; r < nrows; ++r) {
    if (m[r][ncols] != 0) return std::nullopt;
  }
  std::vector<mpz_class> coords(ncols, 0);
  for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
    const int col = pivot_col_of_row[r];
    mpq_class value = m[r][ncols] / m[r][col];
    value.canonicalize();
    if (value.get_den() != 1) return std::nullopt;
    coords[col] = value.get_num();
  }
  // Verify exactly by chain arithmetic.
  Chain rebuilt(c.dimension());
  for (size_t col = 0; col < ncols; ++col) rebuilt = rebuilt + basis[col].scaled(coords[col]);
  if (!(rebuilt == c)) return std::nullopt;
  return coords;
}

mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev(1);
  int sign = 1;
  for (size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_z_basis(const UndirectedGraph& ug, const std::vector<Chain>& candidate) {
  for (const Chain& c : candidate) {
    if (c.dimension() != 1) throw std::invalid_argument("candidates must be 1-chains");
    if (!is_cycle(c)) throw std::invalid_argument("candidates must be cycles");
    for (const auto& [s, a] : c.terms()) {
      if (!ug.has_edge(s[0], s[1])) throw std::invalid_argument("candidate uses unknown edge");
    }
  }
  const int rank = cycle_space_rank(ug);
  if (static_cast<int>(candidate.size()) != rank) return false;
  const FundamentalBasis fb = fundamental_cycle_basis_full(ug);
  // Coordinates in the fundamental basis are read off the non-tree edge
  // coefficients; each fundamental chain contains its non-tree edge once.
  std::vector<std::vector<mpz_class>> m(rank, std::vector<mpz_class>(rank));
  for (int t = 0; t < rank; ++t) {
    const auto& [u, v] = fb.nontree_edges[t];
    const mpz_class own = fb.chains[t].coefficient({u, v});
    for (int s = 0; s < rank; ++s) {
      // Normalize by the fundamental chain's own coefficient (+-1).
      m[t][s] = candidate[s].coefficient({u, v}) * own;
    }
  }
  const mpz_class det = integer_determinant(std::move(m));
  return det == 1 || det == -1;
}

Chain chain_of_vertex_cycle(const std::vector<int>& cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("vertex cycle needs length >= 3");
  Chain c(1);
  for (size_t i = 0; i < cycle.size(); ++i) {
    const int u = cycle[i];
    const int v = cycle[(i + 1) % cycle.size()];
    if (u == v) throw std::invalid_argument("vertex cycle may not contain loops");
    c.add_term(OrientedSimplex::from_tuple({u, v}), 1);
  }
  return c;
}

SimplexSequence sequence_of_vertex_path(const std::vector<int>& path) {
  SimplexSequence gamma;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] == path[i + 1]) continue;  // loop steps carry no simplex
    gamma.push_back({1, OrientedSimplex::from_tuple({path[i], path[i + 1]})});
  }
  return gamma;
}

}  // namespace matwalk
