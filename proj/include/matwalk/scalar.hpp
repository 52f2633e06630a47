#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace matwalk {

// Indeterminate identifier. A symbolic matrix entry A_{ij} maps to the
// variable (i, j); generators may use other pairs for named parameters.
using VarId = std::pair<int, int>;

// Exponent vector of a monomial, absent variables have exponent 0.
using Monomial = std::map<VarId, unsigned>;

std::string var_name(const VarId& v);

// Sparse multivariate polynomial with integer coefficients.
// Invariant: no zero coefficients stored; std::map keeps a fixed term order
// so equal polynomials have identical representations.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(mpz_class c);
  static Polynomial variable(VarId v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const mpz_class& constant_value() const;  // requires is_constant()

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial pow(unsigned k) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  std::string str() const;

 private:
  std::map<Monomial, mpz_class> terms_;
};

// Element of an integral domain: arbitrary-precision integer, normalized
// rational, or sparse multivariate polynomial over Z. Integers embed into
// the other two variants; rationals and polynomials do not mix.
class Scalar {
 public:
  Scalar() : v_(mpz_class(0)) {}

  static Scalar integer(long v) { return Scalar(mpz_class(v)); }
  static Scalar integer(mpz_class v) { return Scalar(std::move(v)); }
  static Scalar rational(mpz_class num, mpz_class den);
  static Scalar variable(int i, int j) { return variable(VarId{i, j}); }
  static Scalar variable(VarId v) { return Scalar(Polynomial::variable(v)); }
  static Scalar polynomial(Polynomial p) { return Scalar(std::move(p)); }

  // Text grammar: integer `-?[0-9]+`, rational `-?[0-9]+/[1-9][0-9]*`.
  static Scalar parse(const std::string& text);

  bool is_integer() const { return std::holds_alternative<mpz_class>(v_); }
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  bool is_polynomial() const { return std::holds_alternative<Polynomial>(v_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const;
  Scalar pow(unsigned k) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  const mpz_class& as_integer() const { return std::get<mpz_class>(v_); }
  const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
  const Polynomial& as_polynomial() const { return std::get<Polynomial>(v_); }

 private:
  explicit Scalar(mpz_class v) : v_(std::move(v)) {}
  explicit Scalar(mpq_class v) : v_(std::move(v)) {}
  explicit Scalar(Polynomial v) : v_(std::move(v)) {}

  std::variant<mpz_class, mpq_class, Polynomial> v_;
};

// Formal quotient of nonzero scalars. Never reduced; equality is defined
// by cross-multiplication in the fraction field.
struct Ratio {
  Scalar num;
  Scalar den;

  Ratio(Scalar n, Scalar d);
};

bool ratio_eq(const Ratio& a, const Ratio& b);

}  // namespace matwalk
