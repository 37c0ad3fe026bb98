#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hyturan/construct.hpp"
#include "hyturan/detect.hpp"
#include "hyturan/extremal.hpp"
#include "hyturan/io.hpp"
#include "hyturan/spectral.hpp"
#include "hyturan/verify.hpp"

using namespace hyturan;

namespace {

constexpr int kExitContains = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitUsage = 64;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hypergraph load(const std::string& path) { return hypergraph_from_json(read_input(path)); }

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfiniteP;
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(p >= 1.0)) throw ValidationError("--p must be a number >= 1 or 'inf'");
  return p;
}

std::size_t thread_count(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("HYTURAN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1;
}

void emit(const nlohmann::ordered_json& j) { std::cout << dump(j); }

struct GenArgs {
  std::string name;
  std::size_t n = 0, k = 0, r = 3, t = 0;
  std::vector<std::size_t> sizes;
  double probability = 0.5;
  std::uint64_t seed = 0;
  bool shared = false;
};

Hypergraph generate(const GenArgs& a) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw ValidationError(what);
  };
  if (a.name == "turan") return turan_hypergraph(a.n, a.k, a.r);
  if (a.name == "complete") return complete_r_graph(a.n, a.r);
  if (a.name == "expanded-clique")
    return expanded_clique(a.t, a.r, a.shared ? Enlargement::shared : Enlargement::disjoint);
  if (a.name == "fan") return generalized_fan(a.t, a.r);
  if (a.name == "k-partite") {
    need(!a.sizes.empty(), "k-partite needs --sizes");
    return complete_k_partite(a.sizes, a.r);
  }
  if (a.name == "semibipartite") return semibipartite_max(a.n);
  if (a.name == "g62") return g62();
  if (a.name == "g62-blowup") {
    need(a.sizes.size() == 6, "g62-blowup needs six --sizes");
    return g62_blowup(a.sizes);
  }
  if (a.name == "g62-balanced") return g62_balanced(a.n);
  if (a.name == "m1") return m1_pattern();
  if (a.name == "random") return random_hypergraph(a.n, a.r, a.probability, a.seed);
  throw ValidationError("unknown generator '" + a.name + "'");
}

struct PatternArgs {
  std::string kind;
  std::size_t t = 0, r = 3;
  std::string graph_file;
};

std::optional<Pattern> make_pattern(const PatternArgs& a) {
  if (a.kind.empty() || a.kind == "none") return std::nullopt;
  const auto kind = parse_kind(a.kind);
  if (!kind) throw ValidationError("unknown pattern '" + a.kind + "'");
  switch (*kind) {
    case PatternKind::explicit_graph:
      if (a.graph_file.empty()) throw ValidationError("explicit pattern needs --graph");
      return Pattern::explicit_graph(load(a.graph_file));
    case PatternKind::expanded_clique:
      return Pattern::expanded_clique(a.t, a.r);
    case PatternKind::generalized_fan:
      return Pattern::generalized_fan(a.t, a.r);
    case PatternKind::clique_family:
      return Pattern::clique_family(a.t, a.r);
    case PatternKind::fan_family:
      return Pattern::fan_family(a.t, a.r);
    case PatternKind::berge_clique:
      return Pattern::berge_clique(a.t);
    case PatternKind::m1:
      return Pattern::m1();
    case PatternKind::semibipartite_colorable:
      return Pattern::semibipartite_colorable();
    case PatternKind::g62_colorable:
      return Pattern::g62_colorable();
    case PatternKind::m_family:
      return Pattern::m_family();
  }
  return std::nullopt;
}

void add_pattern_flags(CLI::App* cmd, PatternArgs& a) {
  cmd->add_option("--pattern", a.kind,
                  "explicit|expanded-clique|fan|clique-family|fan-family|berge|m1|semibipartite|g62color|m-family");
  cmd->add_option("--t", a.t, "Core size / clique order");
  cmd->add_option("--pattern-r", a.r, "Uniformity of the pattern (defaults to the host's)");
  cmd->add_option("--graph", a.graph_file, "JSON file holding the explicit pattern");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral Turan toolkit for r-uniform hypergraphs"};
  app.require_subcommand(1);
  std::size_t threads_flag = 0;
  app.add_option("--threads", threads_flag, "Worker threads (falls back to HYTURAN_THREADS, then 1)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a construction as JSON");
  gen_cmd->add_option("name", gen.name,
                      "turan|complete|expanded-clique|fan|k-partite|semibipartite|g62|g62-blowup|g62-balanced|m1|random")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Vertices (clique order for 'complete')");
  gen_cmd->add_option("--k", gen.k, "Parts");
  gen_cmd->add_option("--r", gen.r, "Uniformity")->capture_default_str();
  gen_cmd->add_option("--t", gen.t, "Core size");
  gen_cmd->add_option("--sizes", gen.sizes, "Part sizes")->delimiter(',');
  gen_cmd->add_option("--prob", gen.probability, "Edge probability for 'random'")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed for 'random'");
  gen_cmd->add_flag("--shared", gen.shared, "Expanded clique with one shared enlargement set");

  std::string input;
  std::string p_text = "2";
  SolverConfig solver;
  auto* spec_cmd = app.add_subcommand("spectral", "p-spectral radius of a JSON hypergraph");
  spec_cmd->add_option("input", input, "JSON file (stdin when omitted)");
  spec_cmd->add_option("--p", p_text, "p >= 1 or 'inf'")->capture_default_str();
  spec_cmd->add_option("--tol", solver.tol)->capture_default_str();
  spec_cmd->add_option("--restarts", solver.restarts)->capture_default_str();
  spec_cmd->add_option("--max-iter", solver.max_iter)->capture_default_str();
  spec_cmd->add_option("--seed", solver.seed);

  PatternArgs check_pat;
  std::uint64_t budget = DetectLimits{}.node_budget;
  auto* check_cmd = app.add_subcommand("check", "Pattern containment; exit 0 free, 1 contains, 2 budget");
  check_cmd->add_option("input", input, "JSON file (stdin when omitted)");
  add_pattern_flags(check_cmd, check_pat);
  check_cmd->get_option("--pattern")->required();
  check_cmd->add_option("--budget", budget, "Backtracking node budget")->capture_default_str();

  PatternArgs search_pat;
  std::size_t search_n = 0, search_r = 3;
  std::string objective = "edges", mode = "exhaustive", start;
  std::size_t climb_budget = HillClimbOptions{}.budget;
  bool extended = false;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive or hill-climbing extremal search");
  search_cmd->add_option("--n", search_n, "Vertices");
  search_cmd->add_option("--r", search_r, "Uniformity")->capture_default_str();
  add_pattern_flags(search_cmd, search_pat);
  search_cmd->add_option("--objective", objective, "edges|lambda")->capture_default_str();
  search_cmd->add_option("--p", p_text, "p for the lambda objective")->capture_default_str();
  search_cmd->add_option("--mode", mode, "exhaustive|hill-climb")->capture_default_str();
  search_cmd->add_option("--start", start, "Starting graph for hill-climb (edgeless when omitted)");
  search_cmd->add_option("--budget", climb_budget, "Solver evaluations for hill-climb")->capture_default_str();
  search_cmd->add_option("--seed", solver.seed);
  search_cmd->add_flag("--extended", extended, "Allow up to 35 edge slots in exhaustive mode");

  std::size_t stab_k = 0;
  double epsilon = 0.01;
  StabilityOptions stab;
  auto* stab_cmd = app.add_subcommand("stability", "Partition diagnostics against the complete k-partite graph");
  stab_cmd->add_option("input", input, "JSON file (stdin when omitted)");
  stab_cmd->add_option("--k", stab_k, "Parts")->required();
  stab_cmd->add_option("--epsilon", epsilon)->capture_default_str();
  stab_cmd->add_option("--restarts", stab.restarts)->capture_default_str();
  stab_cmd->add_option("--seed", stab.seed);

  bool quick = false;
  auto* verify_cmd = app.add_subcommand("verify", "Property suites and acceptance experiments");
  verify_cmd->add_flag("--quick", quick, "Reduced instance counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::size_t threads = thread_count(threads_flag);
  solver.threads = threads;
  try {
    if (*gen_cmd) {
      emit(to_json(generate(gen)));
      return 0;
    }
    if (*spec_cmd) {
      const Hypergraph h = load(input);
      solver.p = parse_p(p_text);
      emit(to_json(p_spectral_radius(h, solver)));
      return 0;
    }
    if (*check_cmd) {
      const Hypergraph h = load(input);
      if (!check_cmd->get_option("--pattern-r")->count()) check_pat.r = h.uniformity();
      const auto pattern = make_pattern(check_pat);
      if (!pattern) throw ValidationError("--pattern is required");
      const Witness w = contains(h, *pattern, DetectLimits{budget});
      auto out = to_json(w);
      out["pattern"] = pattern->describe();
      emit(out);
      if (w.status == SearchStatus::budget_exceeded) return kExitCapacity;
      return w.found() ? kExitContains : 0;
    }
    if (*search_cmd) {
      if (!search_cmd->get_option("--pattern-r")->count()) search_pat.r = search_r;
      const auto pattern = make_pattern(search_pat);
      solver.p = parse_p(p_text);
      EnumerateOptions eo;
      eo.threads = threads;
      eo.extended_capacity = extended;
      SearchRecord rec;
      if (mode == "exhaustive") {
        if (search_n == 0) throw ValidationError("--n is required");
        if (objective == "edges")
          rec = ex_search(search_n, search_r, pattern, eo);
        else if (objective == "lambda")
          rec = spex_search(search_n, search_r, pattern, solver, eo);
        else
          throw ValidationError("--objective must be edges or lambda");
      } else if (mode == "hill-climb") {
        if (objective != "lambda") throw ValidationError("hill-climb optimizes lambda; pass --objective lambda");
        HillClimbOptions hc;
        hc.budget = climb_budget;
        hc.seed = solver.seed;
        hc.solver = solver;
        const Hypergraph h0 = start.empty() ? Hypergraph(search_n, search_r) : load(start);
        rec = hill_climb(h0, pattern, hc);
      } else {
        throw ValidationError("--mode must be exhaustive or hill-climb");
      }
      emit(to_json(rec));
      return 0;
    }
    if (*stab_cmd) {
      const Hypergraph h = load(input);
      emit(to_json(stability_report(h, stab_k, epsilon, stab)));
      return 0;
    }
    if (*verify_cmd) {
      verify::Options opts{quick, threads};
      std::vector<verify::CheckResult> results = verify::property_suites(opts);
      for (int id = 1; id <= verify::kCriterionCount; ++id) results.push_back(verify::acceptance_criterion(id, opts));
      return verify::print_results(results, std::cout) == 0 ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IndexError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
