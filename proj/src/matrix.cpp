#include "matwalk/matrix.hpp"

#include <map>

namespace matwalk {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int i = 1; i <= n; ++i) m.set(i, i, Scalar::integer(1));
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const int n = static_cast<int>(rows.size());
  ExactMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n) {
      throw std::invalid_argument("matrix rows must all have length n");
    }
    for (int j = 1; j <= n; ++j) m.set(i, j, rows[i - 1][j - 1]);
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (n_ != o.n_) return false;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (!((*this)(i, j) == o(i, j))) return false;
  return true;
}

void IdentityInstance::validate(int order) const {
  if (exponents.empty() || exponents.size() != indices.size()) {
    throw std::invalid_argument("instance needs k >= 1 exponents and k indices");
  }
  for (int m : exponents) {
    if (m < 1) throw std::invalid_argument("instance exponents must be >= 1");
  }
  for (int i : indices) {
    if (i < 1 || i > order) throw std::out_of_range("instance index out of range");
  }
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("matrix order mismatch");
  const int n = a.order();
  ExactMatrix c(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Scalar s;
      for (int k = 1; k <= n; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        s = s + a(i, k) * b(k, j);
      }
      c.set(i, j, std::move(s));
    }
  }
  return c;
}

ExactMatrix mat_pow(const ExactMatrix& a, unsigned m) {
  ExactMatrix result = ExactMatrix::identity(a.order());
  ExactMatrix base = a;
  while (m > 0) {
    if (m & 1u) result = mat_mul(result, base);
    m >>= 1u;
    if (m > 0) base = mat_mul(base, base);
  }
  return result;
}

Scalar cycle_product(const ExactMatrix& a, const IdentityInstance& inst,
                     CycleDirection dir) {
  inst.validate(a.order());
  std::map<int, ExactMatrix> powers;
  const auto power = [&](int m) -> const ExactMatrix& {
    auto it = powers.find(m);
    if (it == powers.end()) {
      it = powers.emplace(m, mat_pow(a, static_cast<unsigned>(m))).first;
    }
    return it->second;
  };
  const int k = inst.k();
  Scalar prod = Scalar::integer(1);
  for (int t = 0; t < k; ++t) {
    const int from = inst.indices[t];
    const int to = inst.indices[(t + 1) % k];
    const ExactMatrix& p = power(inst.exponents[t]);
    prod = prod * (dir == CycleDirection::Forward ? p(from, to) : p(to, from));
  }
  return prod;
}

}  // namespace matwalk
