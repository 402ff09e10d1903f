#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperres/polynomial.hpp"

namespace hyperres {

/// An exactly evaluated bound expression.
struct BoundValue {
  std::string formula;
  std::vector<std::pair<std::string, long>> params;
  Rational value;
  BigInt floor;  ///< floor(value)
  std::string note;
};

BigInt binomial(long n, long k);
BigInt factorial(long n);
BigInt floor_of(const Rational& q);

/// Exact decimal expansion when the denominator is 2^a 5^b, otherwise the
/// value rounded to `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits = 30);

/// max{ C(n,k) - C(n-s,k), C((s+1)k-1,k) }, the note naming the branch
/// that attains it ("erdos", "complete" or "both"). Needs n >= (s+1)k.
BoundValue emc_bound(long n, long k, long s);

struct LovaszBound {
  BoundValue as_printed;    ///< (ks)^s
  BoundValue as_corollary;  ///< (ks)^k, the reading giving 27s^3 at k = 3
  std::string note;
};

/// Both readings of the general upper bound on m(k,s). Comparisons made
/// elsewhere use as_corollary. Needs k, s >= 1.
LovaszBound lovasz_bound(long k, long s);

/// 73/6 s^3 + 50 for 3 <= s <= 20 and 73/6 s^3 for s >= 21.
BoundValue fw_cubic_bound(long s);

/// sum_{i=1..k} k!/i!, which equals floor((e-1) k!). Needs k >= 1.
BoundValue el_lower_bound(long k);

/// The cubic f(s,t) bounding 2-resilient 3-graphs with ν = s, evaluated
/// term by term as written. Needs s >= 2 and 0 <= t <= s.
BoundValue f_poly(long s, long t);

/// f(s,t) as a polynomial, assembled from the same unexpanded terms.
Polynomial f_poly_symbolic();
/// f(s,t) in expanded monomial form.
Polynomial f_poly_expanded();

/// max over t in 0..s of f(s,t), and the t attaining it (least such t).
std::pair<Rational, long> f_poly_max(long s);

/// C(2k - t, k). Needs k > t >= 1.
BoundValue intersecting_cover_bound(long k, long t);

struct Anchor {
  std::string name;
  BigInt value;
  std::string expression;
};

/// Fixed numeric anchors: C(2s+1,2) and C(3s+2,3) for s = 1, 2, C(7,4),
/// and the known interval 42 <= m(4,1) <= 175.
std::vector<Anchor> misc_anchors();

nlohmann::json to_json(const BoundValue& b);
nlohmann::json to_json(const LovaszBound& b);

}  // namespace hyperres
