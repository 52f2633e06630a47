#include "matwalk/scalar.hpp"

#include <regex>
#include <sstream>

namespace matwalk {

std::string var_name(const VarId& v) {
  std::ostringstream os;
  os << "x_" << v.first << "_" << v.second;
  return os.str();
}

Polynomial Polynomial::constant(mpz_class c) {
  Polynomial p;
  if (c != 0) p.terms_[Monomial{}] = std::move(c);
  return p;
}

Polynomial Polynomial::variable(VarId v) {
  Polynomial p;
  p.terms_[Monomial{{v, 1u}}] = 1;
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

const mpz_class& Polynomial::constant_value() const {
  static const mpz_class zero(0);
  if (terms_.empty()) return zero;
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.begin()->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [mono, coeff] : o.terms_) {
    auto it = r.terms_.find(mono);
    if (it == r.terms_.end()) {
      r.terms_[mono] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [mono, coeff] : r.terms_) coeff = -coeff;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        mpz_class c = ca * cb;
        if (c != 0) r.terms_[std::move(m)] = std::move(c);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    mpz_class a = coeff;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool printed_coeff = false;
    if (a != 1 || mono.empty()) {
      os << a.get_str();
      printed_coeff = true;
    }
    bool first_var = !printed_coeff;
    for (const auto& [v, e] : mono) {
      if (!first_var || printed_coeff) os << "*";
      os << var_name(v);
      if (e > 1) os << "^" << e;
      first_var = false;
    }
  }
  return os.str();
}

Scalar Scalar::rational(mpz_class num, mpz_class den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_class q(std::move(num), std::move(den));
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::parse(const std::string& text) {
  static const std::regex int_re("-?[0-9]+");
  static const std::regex rat_re("(-?[0-9]+)/([1-9][0-9]*)");
  std::smatch m;
  if (std::regex_match(text, m, int_re)) {
    return Scalar(mpz_class(text, 10));
  }
  if (std::regex_match(text, m, rat_re)) {
    mpq_class q(mpz_class(m[1].str(), 10), mpz_class(m[2].str(), 10));
    q.canonicalize();
    return Scalar(std::move(q));
  }
  throw std::invalid_argument("malformed scalar entry: '" + text + "'");
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return v.is_zero();
        } else {
          return v == 0;
        }
      },
      v_);
}

bool Scalar::is_one() const {
  return *this == Scalar::integer(1);
}

namespace {

// Binary arithmetic dispatch with the integer embeddings applied first.
template <typename F>
Scalar binop(const Scalar& a, const Scalar& b, F&& f) {
  if (a.is_integer() && b.is_rational()) {
    return f(Scalar::rational(a.as_integer(), 1), b);
  }
  if (a.is_rational() && b.is_integer()) {
    return f(a, Scalar::rational(b.as_integer(), 1));
  }
  if (a.is_integer() && b.is_polynomial()) {
    return f(Scalar::polynomial(Polynomial::constant(a.as_integer())), b);
  }
  if (a.is_polynomial() && b.is_integer()) {
    return f(a, Scalar::polynomial(Polynomial::constant(b.as_integer())));
  }
  if (a.is_rational() != b.is_rational() || a.is_polynomial() != b.is_polynomial()) {
    throw std::invalid_argument("scalar domains do not mix (rational vs polynomial)");
  }
  return f(a, b);
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  return binop(*this, o, [](const Scalar& a, const Scalar& b) {
    if (a.is_integer()) return Scalar::integer(mpz_class(a.as_integer() + b.as_integer()));
    if (a.is_rational()) {
      mpq_class q = a.as_rational() + b.as_rational();
      q.canonicalize();
      return Scalar::rational(q.get_num(), q.get_den());
    }
    return Scalar::polynomial(a.as_polynomial() + b.as_polynomial());
  });
}

Scalar Scalar::operator-() const {
  if (is_integer()) return Scalar::integer(mpz_class(-as_integer()));
  if (is_rational()) return Scalar::rational(-as_rational().get_num(), as_rational().get_den());
  return Scalar::polynomial(-as_polynomial());
}

Scalar Scalar::operator*(const Scalar& o) const {
  return binop(*this, o, [](const Scalar& a, const Scalar& b) {
    if (a.is_integer()) return Scalar::integer(mpz_class(a.as_integer() * b.as_integer()));
    if (a.is_rational()) {
      mpq_class q = a.as_rational() * b.as_rational();
      q.canonicalize();
      return Scalar::rational(q.get_num(), q.get_den());
    }
    return Scalar::polynomial(a.as_polynomial() * b.as_polynomial());
  });
}

Scalar Scalar::pow(unsigned k) const {
  if (is_polynomial()) return Scalar::polynomial(as_polynomial().pow(k));
  Scalar r = Scalar::integer(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  const Scalar diff = *this - o;
  return diff.is_zero();
}

std::string Scalar::str() const {
  if (is_integer()) return as_integer().get_str();
  if (is_rational()) {
    const mpq_class& q = as_rational();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  return as_polynomial().str();
}

Ratio::Ratio(Scalar n, Scalar d) : num(std::move(n)), den(std::move(d)) {
  if (num.is_zero() || den.is_zero()) {
    throw std::invalid_argument("ratio components must be nonzero");
  }
}

bool ratio_eq(const Ratio& a, const Ratio& b) {
  return a.num * b.den == b.num * a.den;
}

}  // namespace matwalk
