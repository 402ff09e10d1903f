// hyperres: command-line front end.
//
// Exit codes: 0 success, 1 a check or verification failed, 2 bad input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperres/bounds.hpp"
#include "hyperres/check_suite.hpp"
#include "hyperres/constructions.hpp"
#include "hyperres/error.hpp"
#include "hyperres/io.hpp"
#include "hyperres/report.hpp"
#include "hyperres/search.hpp"

namespace {

using namespace hyperres;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct AnalyzeArgs {
  std::string file;
  std::vector<int> sunflower_sizes;
  bool json = false;
};

struct CheckArgs {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::string dump_dir = "hyperres-counterexamples";
  bool json = false;
};

struct BoundsArgs {
  std::string formula;
  std::optional<long> n, k, s, t;
};

struct ConstructArgs {
  std::string name;
  std::string output;
  bool json = false;
};

struct SearchArgs {
  int k = 3;
  int s = 1;
  int t = -1;
  int max_n = 6;
  std::uint64_t budget = 50'000'000;
  std::string mode = "maximize";
  std::optional<std::size_t> target;
  std::optional<int> threads;
  std::string out_dir;
  bool lower_bound = false;
  bool json = false;
};

long need(const std::optional<long>& v, const char* name) {
  if (!v) throw InvalidArgument(std::string("missing --") + name);
  return *v;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << text;
}

int run_analyze(const AnalyzeArgs& a) {
  KFamily f = [&] {
    if (a.file == "-") {
      std::string text((std::istreambuf_iterator<char>(std::cin)),
                       std::istreambuf_iterator<char>());
      return parse_family(text);
    }
    return read_family_file(a.file);
  }();
  const AnalysisReport r = analyze(f, a.sunflower_sizes);
  if (a.json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << format_report(r);
  }
  return kOk;
}

int run_check(const CheckArgs& a) {
  if (a.suite != "paper" && a.suite != "quick") {
    std::cerr << "error: unknown suite \"" << a.suite
              << "\" (expected paper or quick)\n";
    return kUsage;
  }
  SuiteOptions options;
  options.quick = a.suite == "quick";
  options.seed = a.seed;
  options.dump_dir = a.dump_dir;
  const SuiteReport r = check_paper_suite(options);
  if (a.json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "corpus: " << r.corpus_size << " families (seed " << a.seed
              << ")\n";
    for (const CheckEntry& e : r.entries) {
      const char* verdict = !e.passed             ? "FAIL"
                            : e.known_discrepancy ? "NOTE"
                                                  : "PASS";
      std::cout << verdict << "  " << e.name << ": " << e.detail << "\n";
      for (const std::string& d : e.dumps) {
        std::cout << "      counterexample written to " << d << "\n";
      }
    }
    std::cout << (r.all_passed() ? "all checks passed" : "CHECKS FAILED")
              << "\n";
  }
  return r.all_passed() ? kOk : kViolation;
}

int run_bounds(const BoundsArgs& a) {
  nlohmann::json out;
  const std::string& f = a.formula;
  if (f == "emc") {
    out = to_json(emc_bound(need(a.n, "n"), need(a.k, "k"), need(a.s, "s")));
  } else if (f == "lovasz") {
    out = to_json(lovasz_bound(need(a.k, "k"), need(a.s, "s")));
  } else if (f == "fw") {
    out = to_json(fw_cubic_bound(need(a.s, "s")));
  } else if (f == "el") {
    out = to_json(el_lower_bound(need(a.k, "k")));
  } else if (f == "fpoly") {
    const long s = need(a.s, "s");
    if (a.t) {
      out = to_json(f_poly(s, *a.t));
    } else {
      const auto [max, arg] = f_poly_max(s);
      out = {{"formula", "fpoly_max"},
             {"params", {{"s", s}}},
             {"value", max.str()},
             {"decimal", to_decimal(max)},
             {"floor", floor_of(max).str()},
             {"argmax_t", arg},
             {"notes", "max over t = 0..s of f(s,t)"}};
    }
  } else if (f == "anchors") {
    auto anchors = nlohmann::json::array();
    for (const Anchor& x : misc_anchors()) {
      anchors.push_back({{"name", x.name},
                         {"value", x.value.str()},
                         {"expression", x.expression}});
    }
    out = {{"formula", "anchors"}, {"anchors", anchors}};
    if (a.k && a.t) {
      out["f25"] = to_json(intersecting_cover_bound(*a.k, *a.t));
    }
  } else {
    std::cerr << "error: unknown formula \"" << f
              << "\" (expected emc, lovasz, fw, el, fpoly or anchors)\n";
    return kUsage;
  }
  std::cout << out.dump() << "\n";
  return kOk;
}

int run_construct(const ConstructArgs& a) {
  const KFamily f = construct(a.name);
  const std::string text =
      a.json ? family_to_json(f).dump() + "\n" : format_family(f);
  if (a.output.empty()) {
    std::cout << text;
  } else {
    write_file(a.output, text);
  }
  return kOk;
}

int threads_from_env() {
  const char* env = std::getenv("HYPERRES_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("bad HYPERRES_THREADS \"") + env + "\"");
  }
}

int run_search(const SearchArgs& a) {
  const int t = a.t < 0 ? a.k - 1 : a.t;
  if (a.lower_bound) {
    const LowerBoundReport r = verify_lower_bound(a.k, a.s, t);
    if (a.json) {
      std::cout << to_json(r).dump(2) << "\n";
    } else {
      std::cout << "complete " << a.k << "-graph on " << r.n
                << " vertices: size " << r.size << ", nu " << r.nu << ", "
                << (r.resilient ? "" : "not ") << t << "-resilient\n"
                << (r.certified ? "certified" : "NOT certified")
                << ": m >= " << r.size << "\n";
    }
    return r.certified ? kOk : kViolation;
  }

  SearchSpec spec;
  spec.k = a.k;
  spec.s = a.s;
  spec.t = t;
  spec.max_n = a.max_n;
  spec.node_budget = a.budget;
  spec.mode = search_mode_from_string(a.mode);
  spec.target = a.target;
  spec.threads = a.threads ? *a.threads : threads_from_env();
  const SearchResult r = max_resilient_family(spec);

  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      write_file(std::filesystem::path(a.out_dir) /
                     ("witness-" + std::to_string(i + 1) + ".txt"),
                 format_family(r.witnesses[i]));
    }
  }

  if (a.json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "search k=" << spec.k << " s=" << spec.s << " t=" << spec.t
              << " max_n=" << spec.max_n << " mode=" << a.mode << "\n";
    if (r.found) {
      std::cout << "best size: " << r.best_size << "\n";
    } else {
      std::cout << "best size: none found\n";
    }
    std::cout << "witnesses: " << r.witnesses.size() << "\n"
              << "exhausted: " << (r.exhausted ? "yes" : "no") << "\n"
              << "nodes: " << r.nodes << "\n"
              << "scope: " << r.scope_note() << "\n";
    if (r.target_confirmed) {
      std::cout << "target " << *spec.target << ": "
                << (*r.target_confirmed ? "confirmed" : "NOT confirmed")
                << "\n";
    }
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      std::cout << "witness " << i + 1 << ":";
      for (Mask e : r.witnesses[i].edges()) {
        std::cout << " " << edge_to_string(e);
      }
      std::cout << "\n";
    }
  }
  if (r.target_confirmed && !*r.target_confirmed) return kViolation;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for t-resilient k-uniform families"};
  app.require_subcommand(1);
  int code = kOk;

  AnalyzeArgs analyze_args;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Report invariants of a family file");
  analyze_cmd->add_option("file", analyze_args.file, "Family file, or - for stdin")
      ->required();
  analyze_cmd->add_option("--sunflower", analyze_args.sunflower_sizes,
                          "Pseudo sunflower sizes to scan (default k*nu+1)");
  analyze_cmd->add_flag("--json", analyze_args.json, "JSON output");
  analyze_cmd->callback([&] { code = run_analyze(analyze_args); });

  CheckArgs check_args;
  auto* check_cmd =
      app.add_subcommand("check", "Run the verification suite (paper|quick)");
  check_cmd->add_option("suite", check_args.suite, "paper or quick")->required();
  check_cmd->add_option("--seed", check_args.seed, "Corpus seed");
  check_cmd->add_option("--dump-dir", check_args.dump_dir,
                        "Directory for counterexample files");
  check_cmd->add_flag("--json", check_args.json, "JSON output");
  check_cmd->callback([&] { code = run_check(check_args); });

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Evaluate a bound: emc, lovasz, fw, el, fpoly, anchors");
  bounds_cmd->add_option("formula", bounds_args.formula)->required();
  bounds_cmd->add_option("--n", bounds_args.n);
  bounds_cmd->add_option("--k", bounds_args.k);
  bounds_cmd->add_option("--s", bounds_args.s);
  bounds_cmd->add_option("--t", bounds_args.t);
  bounds_cmd->add_flag("--json", "Accepted for symmetry; output is JSON");
  bounds_cmd->callback([&] { code = run_bounds(bounds_args); });

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand(
      "construct",
      "Emit a named family: complete:N,K  erdos:N,K,S  fixture  triangle "
      "C4 P2 P3 P4 star2 star3 K3..K6");
  construct_cmd->add_option("name", construct_args.name)->required();
  construct_cmd->add_option("-o,--output", construct_args.output,
                            "Output file (default stdout)");
  construct_cmd->add_flag("--json", construct_args.json, "JSON family format");
  construct_cmd->callback([&] { code = run_construct(construct_args); });

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand(
      "search", "Largest t-resilient k-graph with matching number s");
  search_cmd->add_option("--k", search_args.k)->check(CLI::Range(1, 64));
  search_cmd->add_option("--s", search_args.s)->check(CLI::Range(1, 64));
  search_cmd->add_option("--t", search_args.t, "Default k-1");
  search_cmd->add_option("--max-n", search_args.max_n)->check(CLI::Range(1, 64));
  search_cmd->add_option("--budget", search_args.budget, "Node budget");
  search_cmd->add_option("--mode", search_args.mode)
      ->check(CLI::IsMember({"maximize", "verify_target", "verify_unique"}));
  search_cmd->add_option("--target", search_args.target);
  search_cmd->add_option("--threads", search_args.threads,
                         "Worker threads (default $HYPERRES_THREADS or 1)");
  search_cmd->add_option("--out-dir", search_args.out_dir,
                         "Write witnesses as family files here");
  search_cmd->add_flag("--lower-bound", search_args.lower_bound,
                       "Certify the complete k-graph on sk+k-1 vertices");
  search_cmd->add_flag("--json", search_args.json, "JSON output");
  search_cmd->callback([&] { code = run_search(search_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const hyperres::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
