#include "matwalk/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace matwalk {

void WeightedDigraph::add_edge(int u, int v, Scalar w) {
  check_vertex(u);
  check_vertex(v);
  if (w.is_zero()) throw std::invalid_argument("edge weight must be nonzero");
  edges_[{u, v}] = std::move(w);
}

bool WeightedDigraph::has_edge(int u, int v) const {
  return edges_.count({u, v}) > 0;
}

const Scalar& WeightedDigraph::weight(int u, int v) const {
  auto it = edges_.find({u, v});
  if (it == edges_.end()) throw std::out_of_range("no such edge");
  return it->second;
}

std::vector<int> WeightedDigraph::successors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for (auto it = edges_.lower_bound({u, 1}); it != edges_.end() && it->first.first == u; ++it) {
    out.push_back(it->first.second);
  }
  return out;
}

Walk Walk::make(const WeightedDigraph& g, std::vector<int> vertices) {
  if (vertices.empty()) throw std::invalid_argument("walk needs at least one vertex");
  if (!is_walk(g, vertices)) throw std::invalid_argument("sequence is not a walk");
  return Walk(std::move(vertices));
}

void UndirectedGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("undirected graph is simple, no loops");
  if (u < 1 || u > n || v < 1 || v > n) throw std::out_of_range("vertex out of range");
  edges.insert({std::min(u, v), std::max(u, v)});
}

bool UndirectedGraph::has_edge(int u, int v) const {
  return edges.count({std::min(u, v), std::max(u, v)}) > 0;
}

WeightedDigraph digraph_of_matrix(const ExactMatrix& a) {
  WeightedDigraph g(a.order());
  for (int i = 1; i <= a.order(); ++i) {
    for (int j = 1; j <= a.order(); ++j) {
      if (!a(i, j).is_zero()) g.add_edge(i, j, a(i, j));
    }
  }
  return g;
}

Scalar walk_weight(const WeightedDigraph& g, const Walk& l) {
  Scalar w = Scalar::integer(1);
  const auto& vs = l.vertices();
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    w = w * g.weight(vs[i], vs[i + 1]);
  }
  return w;
}

std::vector<int> reverse_sequence(const std::vector<int>& seq) {
  return std::vector<int>(seq.rbegin(), seq.rend());
}

std::vector<int> reverse_walk(const Walk& l) { return reverse_sequence(l.vertices()); }

bool is_walk(const WeightedDigraph& g, const std::vector<int>& seq) {
  if (seq.empty()) return false;
  for (int v : seq) {
    if (v < 1 || v > g.order()) return false;
  }
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!g.has_edge(seq[i], seq[i + 1])) return false;
  }
  return true;
}

Walk concat_walks(const WeightedDigraph& g, const Walk& l1, const Walk& l2) {
  if (l1.end() != l2.start()) throw std::invalid_argument("walk endpoints do not match");
  std::vector<int> vs = l1.vertices();
  vs.insert(vs.end(), l2.vertices().begin() + 1, l2.vertices().end());
  return Walk::make(g, std::move(vs));
}

std::vector<Walk> enumerate_walks(const WeightedDigraph& g, int u, int v, int m,
                                  const EnumerationLimits& limits) {
  if (m < 0) throw std::invalid_argument("walk length must be nonnegative");
  if (g.order() > limits.max_n || m > limits.max_len) {
    throw std::length_error("walk enumeration limit exceeded");
  }
  std::vector<Walk> out;
  std::vector<int> cur{u};
  std::function<void()> dfs = [&]() {
    if (static_cast<int>(cur.size()) == m + 1) {
      if (cur.back() == v) out.push_back(Walk::make(g, cur));
      return;
    }
    for (int next : g.successors(cur.back())) {
      cur.push_back(next);
      dfs();
      cur.pop_back();
    }
  };
  if (u >= 1 && u <= g.order() && v >= 1 && v <= g.order()) dfs();
  return out;
}

UndirectedGraph underlying_graph(const WeightedDigraph& g) {
  UndirectedGraph ug(g.order());
  for (const auto& [e, w] : g.edges()) {
    if (e.first != e.second) ug.add_edge(e.first, e.second);
  }
  return ug;
}

namespace {

// Tarjan strongly connected components; returns component id per vertex.
std::vector<int> scc_ids(const WeightedDigraph& g) {
  const int n = g.order();
  std::vector<int> index(n + 1, -1), low(n + 1, 0), comp(n + 1, -1);
  std::vector<bool> on_stack(n + 1, false);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  std::function<void(int)> strongconnect = [&](int v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : g.successors(v)) {
      if (index[w] < 0) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
        if (w == v) break;
      }
      ++next_comp;
    }
  };
  for (int v = 1; v <= n; ++v) {
    if (index[v] < 0) strongconnect(v);
  }
  return comp;
}

std::vector<int> rotate_min_first(std::vector<int> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

// Shortest directed path from s to t using only vertices in the given
// component; returns the vertex sequence including both endpoints.
std::vector<int> directed_path_in_component(const WeightedDigraph& g, int s, int t,
                                            const std::vector<int>& comp) {
  std::vector<int> prev(g.order() + 1, 0);
  std::deque<int> queue{s};
  prev[s] = s;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == t) break;
    for (int w : g.successors(v)) {
      if (w == v || comp[w] != comp[s] || prev[w] != 0) continue;
      prev[w] = v;
      queue.push_back(w);
    }
  }
  std::vector<int> path{t};
  while (path.back() != s) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) {
    for (int i = 0; i <= n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

AcyclicityResult is_acyclic(const WeightedDigraph& g) {
  const std::vector<int> comp = scc_ids(g);

  // Every intra-component non-loop edge must be bidirected.
  for (const auto& [e, w] : g.edges()) {
    const auto [u, v] = e;
    if (u == v || comp[u] != comp[v]) continue;
    if (!g.has_edge(v, u)) {
      // (v, u) is absent, so any directed path v -> u has >= 2 edges and
      // closing it with (u, v) gives a cycle of length >= 3.
      std::vector<int> path = directed_path_in_component(g, v, u, comp);
      return {false, rotate_min_first(std::move(path))};
    }
  }

  // The undirected skeleton of intra-component non-loop edges must be a
  // forest; a non-tree edge closes an undirected cycle whose edges are all
  // bidirected, hence a directed cycle of length >= 3.
  UnionFind uf(g.order());
  std::map<int, std::vector<std::pair<int, int>>> tree_adj;
  for (const auto& [e, w] : g.edges()) {
    const auto [u, v] = e;
    if (u == v || u > v || comp[u] != comp[v]) continue;
    if (uf.unite(u, v)) {
      tree_adj[u].push_back({v, 0});
      tree_adj[v].push_back({u, 0});
    } else {
      // Path u..v through the current forest, then edge (v, u).
      std::vector<int> prev(g.order() + 1, 0);
      std::deque<int> queue{u};
      prev[u] = u;
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) break;
        for (auto [y, unused] : tree_adj[x]) {
          if (prev[y] == 0) {
            prev[y] = x;
            queue.push_back(y);
          }
        }
      }
      std::vector<int> path{v};
      while (path.back() != u) path.push_back(prev[path.back()]);
      std::reverse(path.begin(), path.end());
      return {false, rotate_min_first(std::move(path))};
    }
  }
  return {true, std::nullopt};
}

std::vector<std::vector<int>> enumerate_simple_cycles(const WeightedDigraph& g,
                                                      int max_len, int max_n) {
  if (g.order() > max_n) throw std::length_error("cycle enumeration size limit exceeded");
  std::vector<std::vector<int>> cycles;
  std::vector<bool> used(g.order() + 1, false);
  std::vector<int> cur;

  // Start each cycle at its minimal vertex; never descend below it.
  std::function<void(int)> dfs = [&](int start) {
    int v = cur.back();
    for (int w : g.successors(v)) {
      if (w == start) {
        if (static_cast<int>(cur.size()) <= max_len) cycles.push_back(cur);
        continue;
      }
      if (w < start || used[w]) continue;
      if (static_cast<int>(cur.size()) >= max_len) continue;
      used[w] = true;
      cur.push_back(w);
      dfs(start);
      cur.pop_back();
      used[w] = false;
    }
  };
  for (int s = 1; s <= g.order(); ++s) {
    used[s] = true;
    cur = {s};
    dfs(s);
    used[s] = false;
  }
  return cycles;
}

}  // namespace matwalk
