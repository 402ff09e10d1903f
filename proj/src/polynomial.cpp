#include "hyperres/polynomial.hpp"

#include "hyperres/error.hpp"

namespace hyperres {

Polynomial::Polynomial(const Rational& constant) { add_term({0, 0}, constant); }

Polynomial Polynomial::s() { return monomial(1, 1, 0); }
Polynomial Polynomial::t() { return monomial(1, 0, 1); }

Polynomial Polynomial::monomial(const Rational& c, int s_power, int t_power) {
  Polynomial p;
  p.add_term({s_power, t_power}, c);
  return p;
}

void Polynomial::add_term(std::pair<int, int> powers, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(powers, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(int s_power, int t_power) const {
  auto it = terms_.find({s_power, t_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::depends_on_t() const {
  for (const auto& [powers, c] : terms_) {
    if (powers.second > 0) return true;
  }
  return false;
}

Polynomial Polynomial::derivative_t() const {
  Polynomial out;
  for (const auto& [powers, c] : terms_) {
    if (powers.second == 0) continue;
    out.add_term({powers.first, powers.second - 1}, c * powers.second);
  }
  return out;
}

Polynomial Polynomial::substitute_t(const Polynomial& value) const {
  if (value.depends_on_t()) {
    throw InvalidArgument("substituted value must not involve t");
  }
  Polynomial out;
  for (const auto& [powers, c] : terms_) {
    out = out + monomial(c, powers.first, 0) * pow(value, powers.second);
  }
  return out;
}

Rational Polynomial::evaluate(const Rational& s, const Rational& t) const {
  Rational sum = 0;
  for (const auto& [powers, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < powers.first; ++i) term *= s;
    for (int i = 0; i < powers.second; ++i) term *= t;
    sum += term;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [powers, c] = *it;
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (powers.first > 0) out += "*s^" + std::to_string(powers.first);
    if (powers.second > 0) out += "*t^" + std::to_string(powers.second);
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [powers, c] : b.terms_) out.add_term(powers, c);
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out;
  for (const auto& [powers, c] : a.terms_) out.add_term(powers, -c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      out.add_term({pa.first + pb.first, pa.second + pb.second}, ca * cb);
    }
  }
  return out;
}

Polynomial pow(const Polynomial& p, int e) {
  Polynomial out(1L);
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

}  // namespace hyperres
