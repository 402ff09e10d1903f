#include "hyperres/resilience.hpp"

#include <algorithm>
#include <vector>

#include <boost/math/special_functions/binomial.hpp>

#include "hyperres/error.hpp"
#include "hyperres/solvers.hpp"

namespace hyperres {

namespace {

/// Answers "does F(T̄) still have a matching of size nu" for many T.
class DeletionOracle {
 public:
  DeletionOracle(const KFamily& f, int nu) : f_(f), nu_(nu) {}

  bool survives(Mask deleted) {
    for (Mask cover : known_covers_) {
      if ((cover & deleted) == 0) return true;
    }
    std::vector<Mask> rest;
    rest.reserve(f_.size());
    for (Mask e : f_.edges()) {
      if ((e & deleted) == 0) rest.push_back(e);
    }
    Matching m;
    if (!has_matching_of_size(rest, nu_, &m)) return false;
    known_covers_.push_back(m.cover);
    return true;
  }

 private:
  const KFamily& f_;
  int nu_;
  std::vector<Mask> known_covers_;
};

/// Least mask (numerically) of the given size whose deletion drops ν.
std::optional<Mask> first_violator(const KFamily& f, DeletionOracle& oracle,
                                   int size) {
  std::optional<Mask> found;
  const Mask support = f.support();
  for_each_subset_of_size(f.n(), size, [&](Mask t) {
    if (found || (t & support) == 0) return;  // misses every edge
    if (!oracle.survives(t)) found = t;
  });
  return found;
}

}  // namespace

bool is_t_resilient(const KFamily& f, int t) {
  if (t < 0 || t > f.n()) {
    throw InvalidArgument("resilience level t must lie in 0..n");
  }
  if (t == 0 || f.empty()) return true;
  const int nu = matching_number(f).nu;
  DeletionOracle oracle(f, nu);
  return !first_violator(f, oracle, t).has_value();
}

ResilienceReport resilience_profile(const KFamily& f) {
  if (f.empty()) {
    throw InvalidArgument("resilience profile of the empty family");
  }
  ResilienceReport report;
  report.nu = matching_number(f).nu;
  DeletionOracle oracle(f, report.nu);
  // Deleting the vertices of any edge drops ν, so a violator of size <= k
  // always exists.
  for (int size = 1; size <= f.k(); ++size) {
    if (auto bad = first_violator(f, oracle, size)) {
      report.max_t = size - 1;
      report.violating_set = VertexSet(*bad);
      return report;
    }
  }
  // Only reachable for k = 0 families ({∅}), where no deletion matters.
  report.max_t = f.k();
  return report;
}

KFamily maximal_intersecting_closure(const KFamily& f) {
  if (f.empty() || !is_t_intersecting(f, 1)) {
    throw InvalidArgument("closure needs a non-empty intersecting family");
  }
  const int tau = covering_number(f).tau;
  if (tau != f.k()) {
    throw InvalidArgument("closure needs τ(F) = k, got τ = " +
                          std::to_string(tau));
  }
  const double candidates =
      boost::math::binomial_coefficient<double>(static_cast<unsigned>(f.n()),
                                                static_cast<unsigned>(f.k()));
  if (candidates > static_cast<double>(kClosureCandidateLimit)) {
    throw BudgetExceeded("closure would scan more than " +
                         std::to_string(kClosureCandidateLimit) +
                         " candidate edges");
  }
  std::vector<Mask> edges(f.edges().begin(), f.edges().end());
  for_each_subset_of_size(f.n(), f.k(), [&](Mask cand) {
    if (f.contains(cand)) return;
    const bool meets_all = std::all_of(edges.begin(), edges.end(),
                                       [&](Mask e) { return (e & cand) != 0; });
    if (meets_all) edges.push_back(cand);
  });
  return KFamily(f.k(), f.n(), std::move(edges));
}

}  // namespace hyperres
