#include "hyperres/bounds.hpp"

#include "hyperres/error.hpp"

namespace hyperres {

namespace {

BoundValue make(std::string formula,
                std::vector<std::pair<std::string, long>> params,
                Rational value, std::string note = {}) {
  BoundValue b;
  b.formula = std::move(formula);
  b.params = std::move(params);
  b.floor = floor_of(value);
  b.value = std::move(value);
  b.note = std::move(note);
  return b;
}

Rational q(long num, long den = 1) { return Rational(num, den); }

}  // namespace

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt factorial(long n) {
  BigInt out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt floor_of(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt quot = num / den;
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

std::string to_decimal(const Rational& value, int digits) {
  std::string sign = value < 0 ? "-" : "";
  const Rational mag = value < 0 ? Rational(-value) : value;
  BigInt den = boost::multiprecision::denominator(mag);
  BigInt rest = den;
  while (rest % 2 == 0) rest /= 2;
  while (rest % 5 == 0) rest /= 5;
  const bool terminating = rest == 1;

  BigInt whole = floor_of(mag);
  BigInt rem = boost::multiprecision::numerator(mag) - whole * den;
  std::string frac;
  if (terminating) {
    while (rem != 0) {
      rem *= 10;
      frac += static_cast<char>('0' + static_cast<int>(rem / den));
      rem %= den;
    }
  } else {
    // scaled = round(rem * 10^digits / den), half up
    BigInt scale = boost::multiprecision::pow(BigInt(10),
                                              static_cast<unsigned>(digits));
    BigInt scaled = (2 * rem * scale + den) / (2 * den);
    if (scaled >= scale) {
      whole += 1;
      scaled -= scale;
    }
    frac = scaled.str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  }
  std::string out = sign + whole.str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

BoundValue emc_bound(long n, long k, long s) {
  if (k < 1 || s < 1) throw InvalidArgument("emc bound needs k, s >= 1");
  if (n < (s + 1) * k) {
    throw InvalidArgument("emc bound needs n >= (s+1)k");
  }
  const BigInt erdos = binomial(n, k) - binomial(n - s, k);
  const BigInt complete = binomial((s + 1) * k - 1, k);
  std::string branch = erdos > complete   ? "erdos"
                       : erdos < complete ? "complete"
                                          : "both";
  const BigInt best = erdos > complete ? erdos : complete;
  return make("emc", {{"n", n}, {"k", k}, {"s", s}}, Rational(best),
              "branch=" + branch + "; erdos=" + erdos.str() +
                  "; complete=" + complete.str());
}

LovaszBound lovasz_bound(long k, long s) {
  if (k < 1 || s < 1) throw InvalidArgument("lovasz bound needs k, s >= 1");
  const BigInt ks = BigInt(k) * s;
  LovaszBound out;
  out.as_printed = make("lovasz_as_printed", {{"k", k}, {"s", s}},
                        Rational(boost::multiprecision::pow(
                            ks, static_cast<unsigned>(s))),
                        "(ks)^s");
  out.as_corollary = make("lovasz_as_corollary", {{"k", k}, {"s", s}},
                          Rational(boost::multiprecision::pow(
                              ks, static_cast<unsigned>(k))),
                          "(ks)^k");
  out.note =
      "The theorem prints m(k,s) <= (ks)^s, but its k = 3 corollary reads "
      "27s^3 = (3s)^3 and m(3,2) = 56 exceeds (3*2)^2 = 36. Comparisons use "
      "(ks)^k (as_corollary); as_printed is reported for reference only.";
  return out;
}

BoundValue fw_cubic_bound(long s) {
  if (s < 3) throw InvalidArgument("cubic bound holds for s >= 3 only");
  Rational value = q(73, 6) * s * s * s;
  std::string note = "73/6 s^3";
  if (s <= 20) {
    value += 50;
    note += " + 50";
  }
  return make("fw", {{"s", s}}, value, note);
}

BoundValue el_lower_bound(long k) {
  if (k < 1) throw InvalidArgument("el bound needs k >= 1");
  const BigInt kf = factorial(k);
  BigInt sum = 0;
  BigInt i_fact = 1;
  for (long i = 1; i <= k; ++i) {
    i_fact *= i;
    sum += kf / i_fact;
  }
  return make("el", {{"k", k}}, Rational(sum),
              "sum_{i=1..k} k!/i! = floor((e-1) k!)");
}

BoundValue f_poly(long s, long t) {
  if (s < 2) throw InvalidArgument("f(s,t) needs s >= 2");
  if (t < 0 || t > s) throw InvalidArgument("f(s,t) needs 0 <= t <= s");
  const Rational S = s;
  const Rational T = t;
  const Rational value = 5 * S * T * T + 12 * S * T * (S - T) +
                         6 * S * (S - T) * (S - T) + 4 * S * S * T +
                         q(9, 2) * S * S * S - 3 * T * T * S +
                         q(5, 3) * T * T * T + q(15, 2) * S * S -
                         18 * S * T + T * T + 9 * S - q(5, 3) * T;
  return make("fpoly", {{"s", s}, {"t", t}}, value);
}

Polynomial f_poly_symbolic() {
  const Polynomial S = Polynomial::s();
  const Polynomial T = Polynomial::t();
  return Polynomial(5L) * S * T * T + Polynomial(12L) * S * T * (S - T) +
         Polynomial(6L) * S * (S - T) * (S - T) + Polynomial(4L) * S * S * T +
         Polynomial(q(9, 2)) * S * S * S - Polynomial(3L) * T * T * S +
         Polynomial(q(5, 3)) * T * T * T + Polynomial(q(15, 2)) * S * S -
         Polynomial(18L) * S * T + T * T + Polynomial(9L) * S -
         Polynomial(q(5, 3)) * T;
}

Polynomial f_poly_expanded() {
  using P = Polynomial;
  return P::monomial(q(21, 2), 3, 0) + P::monomial(4, 2, 1) +
         P::monomial(-4, 1, 2) + P::monomial(q(5, 3), 0, 3) +
         P::monomial(q(15, 2), 2, 0) + P::monomial(-18, 1, 1) +
         P::monomial(1, 0, 2) + P::monomial(9, 1, 0) +
         P::monomial(q(-5, 3), 0, 1);
}

std::pair<Rational, long> f_poly_max(long s) {
  Rational best = f_poly(s, 0).value;
  long arg = 0;
  for (long t = 1; t <= s; ++t) {
    Rational v = f_poly(s, t).value;
    if (v > best) {
      best = v;
      arg = t;
    }
  }
  return {best, arg};
}

BoundValue intersecting_cover_bound(long k, long t) {
  if (!(k > t && t >= 1)) throw InvalidArgument("needs k > t >= 1");
  return make("f25", {{"k", k}, {"t", t}}, Rational(binomial(2 * k - t, k)),
              "C(2k-t,k)");
}

std::vector<Anchor> misc_anchors() {
  return {
      {"graph_bound_s1", binomial(3, 2), "C(2s+1,2) at s=1"},
      {"graph_bound_s2", binomial(5, 2), "C(2s+1,2) at s=2"},
      {"conj_bound_s1", binomial(5, 3), "C(3s+2,3) at s=1"},
      {"conj_bound_s2", binomial(8, 3), "C(3s+2,3) at s=2"},
      {"c_7_4", binomial(7, 4), "C(4+3,4)"},
      {"m41_lower", 42, "known lower end for m(4,1)"},
      {"m41_upper", 175, "known upper end for m(4,1)"},
  };
}

nlohmann::json to_json(const BoundValue& b) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, v] : b.params) params[name] = v;
  return {{"formula", b.formula},
          {"params", params},
          {"value", b.value.str()},
          {"decimal", to_decimal(b.value)},
          {"floor", b.floor.str()},
          {"notes", b.note}};
}

nlohmann::json to_json(const LovaszBound& b) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, v] : b.as_printed.params) params[name] = v;
  return {{"formula", "lovasz"},
          {"params", params},
          {"as_printed", to_json(b.as_printed)},
          {"as_corollary", to_json(b.as_corollary)},
          {"value", b.as_corollary.value.str()},
          {"floor", b.as_corollary.floor.str()},
          {"notes", b.note}};
}

}  // namespace hyperres
