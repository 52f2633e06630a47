#pragma once

#include <vector>

#include "matwalk/scalar.hpp"

namespace matwalk {

// Dense square matrix of exact scalars. Indices are 1-based throughout,
// matching the vertex labels of the associated digraph.
class ExactMatrix {
 public:
  explicit ExactMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {
    if (n <= 0) throw std::invalid_argument("matrix order must be positive");
  }

  static ExactMatrix identity(int n);
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  int order() const { return n_; }

  const Scalar& operator()(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, Scalar v) { e_[idx(i, j)] = std::move(v); }

  ExactMatrix transpose() const;

  bool operator==(const ExactMatrix& o) const;

 private:
  size_t idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index");
    return static_cast<size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<Scalar> e_;
};

// One instance of the cyclic identity: exponents m_1..m_k and the index
// cycle i_1..i_k (indices may repeat).
struct IdentityInstance {
  std::vector<int> exponents;  // each >= 1
  std::vector<int> indices;    // each in 1..n

  int k() const { return static_cast<int>(exponents.size()); }
  void validate(int order) const;
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_pow(const ExactMatrix& a, unsigned m);

enum class CycleDirection { Forward, Reverse };

// Product of matrix-power entries around the index cycle:
// forward is prod_t (A^{m_t})_{i_t, i_{t+1}}, reverse swaps each index pair.
// Powers are memoized per call, keyed by exponent.
Scalar cycle_product(const ExactMatrix& a, const IdentityInstance& inst,
                     CycleDirection dir);

}  // namespace matwalk
