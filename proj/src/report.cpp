#include "hyperres/report.hpp"

#include <sstream>

#include "hyperres/bounds.hpp"
#include "hyperres/error.hpp"
#include "hyperres/io.hpp"
#include "hyperres/solvers.hpp"

namespace hyperres {

namespace {

BoundComparison compare(std::size_t size, const BoundValue& b,
                        std::string formula, std::string note) {
  BoundComparison c;
  c.formula = std::move(formula);
  c.value = b.value.str();
  c.within = Rational(static_cast<long>(size)) <= b.value;
  c.note = std::move(note);
  return c;
}

BoundValue constant(long v) {
  BoundValue b;
  b.value = v;
  b.floor = v;
  return b;
}

std::vector<BoundComparison> bound_comparisons(const KFamily& f, int nu,
                                               const ResilienceReport* r) {
  std::vector<BoundComparison> out;
  const long k = f.k();
  const long s = nu;
  const std::size_t size = f.size();
  if (s < 1) return out;
  if (r != nullptr && r->max_t == k - 1) {
    out.push_back(compare(size, lovasz_bound(k, s).as_corollary, "lovasz",
                          "(ks)^k"));
    if (k == 2) {
      out.push_back(compare(size, constant(static_cast<long>(
                                      binomial(2 * s + 1, 2))),
                            "graph", "C(2s+1,2), attained only by K_{2s+1}"));
    } else if (k == 3 && s == 1) {
      out.push_back(compare(size, constant(10), "m31", "m(3,1) = 10"));
    } else if (k == 3 && s == 2) {
      out.push_back(compare(size, constant(56), "m32", "m(3,2) = 56"));
    } else if (k == 3) {
      out.push_back(compare(size, fw_cubic_bound(s), "fw",
                            "73/6 s^3 (+50 for s <= 20)"));
    } else if (k == 4 && s == 1) {
      out.push_back(compare(size, constant(175), "m41_upper",
                            "m(4,1) <= 175"));
    }
  }
  if (f.n() >= (s + 1) * k) {
    out.push_back(compare(size, emc_bound(f.n(), k, s), "emc",
                          "conjectured in general; families with nu <= s"));
  }
  return out;
}

std::vector<Mask> masks_from(const nlohmann::json& j) {
  std::vector<Mask> out;
  for (const auto& e : j) {
    out.push_back(VertexSet::from_vertices(e.get<std::vector<int>>()).mask());
  }
  return out;
}

Mask mask_from(const nlohmann::json& j) {
  return VertexSet::from_vertices(j.get<std::vector<int>>()).mask();
}

std::string set_text(Mask m) { return VertexSet(m).to_string(); }

}  // namespace

AnalysisReport analyze(const KFamily& f, std::span<const int> sunflower_sizes) {
  AnalysisReport r;
  r.k = f.k();
  r.n = f.n();
  r.size = f.size();
  const MatchingResult m = matching_number(f);
  r.nu = m.nu;
  r.matching = m.witness.edges;
  const CoverResult c = covering_number(f);
  r.tau = c.tau;
  r.cover = c.cover.mask();
  if (!f.empty()) r.resilience = resilience_profile(f);
  r.intersection_level = intersection_level(f);

  std::vector<int> sizes(sunflower_sizes.begin(), sunflower_sizes.end());
  if (sizes.empty() && r.nu >= 1 && f.k() >= 1) {
    sizes.push_back(f.k() * r.nu + 1);
  }
  for (int size : sizes) {
    r.sunflowers.push_back({size, find_pseudo_sunflower(f, size)});
  }
  r.bounds = bound_comparisons(f, r.nu,
                               r.resilience ? &*r.resilience : nullptr);
  return r;
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["n"] = r.n;
  j["size"] = r.size;
  j["nu"] = r.nu;
  j["matching"] = edges_to_json(r.matching);
  j["tau"] = r.tau;
  j["cover"] = mask_vertices(r.cover);
  if (r.resilience) {
    const ResilienceReport& res = *r.resilience;
    j["resilience"] = {
        {"nu", res.nu},
        {"max_t", res.max_t},
        {"violating_set", res.violating_set
                              ? nlohmann::json(res.violating_set->vertices())
                              : nlohmann::json(nullptr)}};
  } else {
    j["resilience"] = nullptr;
  }
  j["intersection_level"] = r.intersection_level;
  auto scans = nlohmann::json::array();
  for (const SunflowerScan& s : r.sunflowers) {
    scans.push_back({{"size", s.size},
                     {"witness", s.witness ? to_json(*s.witness)
                                           : nlohmann::json(nullptr)}});
  }
  j["sunflowers"] = scans;
  auto bounds = nlohmann::json::array();
  for (const BoundComparison& b : r.bounds) {
    bounds.push_back({{"formula", b.formula},
                      {"value", b.value},
                      {"within", b.within},
                      {"note", b.note}});
  }
  j["bounds"] = bounds;
  return j;
}

AnalysisReport report_from_json(const nlohmann::json& j) {
  try {
    AnalysisReport r;
    r.k = j.at("k").get<int>();
    r.n = j.at("n").get<int>();
    r.size = j.at("size").get<std::size_t>();
    r.nu = j.at("nu").get<int>();
    r.matching = masks_from(j.at("matching"));
    r.tau = j.at("tau").get<int>();
    r.cover = mask_from(j.at("cover"));
    const auto& res = j.at("resilience");
    if (!res.is_null()) {
      ResilienceReport rr;
      rr.nu = res.at("nu").get<int>();
      rr.max_t = res.at("max_t").get<int>();
      if (!res.at("violating_set").is_null()) {
        rr.violating_set = VertexSet(mask_from(res.at("violating_set")));
      }
      r.resilience = rr;
    }
    r.intersection_level = j.at("intersection_level").get<int>();
    for (const auto& s : j.at("sunflowers")) {
      SunflowerScan scan;
      scan.size = s.at("size").get<int>();
      const auto& w = s.at("witness");
      if (!w.is_null()) {
        PseudoSunflower p;
        p.center = VertexSet(mask_from(w.at("center")));
        p.core = mask_from(w.at("core"));
        p.petals = masks_from(w.at("petals"));
        scan.witness = p;
      }
      r.sunflowers.push_back(std::move(scan));
    }
    for (const auto& b : j.at("bounds")) {
      r.bounds.push_back({b.at("formula").get<std::string>(),
                          b.at("value").get<std::string>(),
                          b.at("within").get<bool>(),
                          b.at("note").get<std::string>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseErrorKind::kBadJson, 0,
                     std::string("bad analysis report: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(ParseErrorKind::kBadJson, 0,
                     std::string("bad analysis report: ") + e.what());
  }
}

std::string format_report(const AnalysisReport& r) {
  std::ostringstream out;
  out << "family: k=" << r.k << " n=" << r.n << " edges=" << r.size << "\n";
  out << "nu: " << r.nu << "  matching:";
  for (Mask e : r.matching) out << " " << set_text(e);
  out << "\n";
  out << "tau: " << r.tau << "  cover: " << set_text(r.cover) << "\n";
  if (r.resilience) {
    out << "resilience: max_t=" << r.resilience->max_t;
    if (r.resilience->violating_set) {
      out << "  violating set: " << r.resilience->violating_set->to_string();
    }
    out << "\n";
  } else {
    out << "resilience: n/a (empty family)\n";
  }
  out << "intersection level: " << r.intersection_level << "\n";
  for (const SunflowerScan& s : r.sunflowers) {
    out << "pseudo sunflower of size " << s.size << ": ";
    if (s.witness) {
      out << "center " << s.witness->center.to_string() << " core "
          << set_text(s.witness->core) << " petals";
      for (Mask p : s.witness->petals) out << " " << set_text(p);
    } else {
      out << "none";
    }
    out << "\n";
  }
  for (const BoundComparison& b : r.bounds) {
    out << "bound " << b.formula << ": " << b.value << " ("
        << (b.within ? "within" : "EXCEEDED") << "; " << b.note << ")\n";
  }
  return out.str();
}

}  // namespace hyperres
