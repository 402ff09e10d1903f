#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperres {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in two variables s, t with exact rational coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit on purpose
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial s();
  static Polynomial t();
  static Polynomial monomial(const Rational& c, int s_power, int t_power);

  Rational coefficient(int s_power, int t_power) const;
  bool depends_on_t() const;
  Polynomial derivative_t() const;
  /// Replaces t by `value`, which must not involve t.
  Polynomial substitute_t(const Polynomial& value) const;
  Rational evaluate(const Rational& s, const Rational& t) const;
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(std::pair<int, int> powers, const Rational& c);

  // (s power, t power) -> non-zero coefficient
  std::map<std::pair<int, int>, Rational> terms_;
};

Polynomial pow(const Polynomial& p, int e);

}  // namespace hyperres
