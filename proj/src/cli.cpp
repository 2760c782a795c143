#include "ergo/cli.hpp"

#include "ergo/error.hpp"
#include "ergo/instance.hpp"
#include "ergo/oracle.hpp"
#include "ergo/potential.hpp"
#include "ergo/subaction.hpp"
#include "ergo/tropical.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>

namespace ergo {

namespace {

struct Options {
  std::string instance;
  std::string out;
  std::string boundary;
  std::string dominant;
  std::string subaction;
  int depth = 0;
  std::string gamma = "1/2";
  std::optional<std::uint64_t> seed;
  std::size_t max_nodes = kDefaultNodeBudget;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kExitParse;
    case ErrorKind::BudgetExceeded: return kExitBudget;
    case ErrorKind::OracleMismatch: return kExitOracle;
    default: return kExitDomain;
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string values_line(const RationalVector& values) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(to_string(v));
  return join(parts, ",");
}

RationalVector parse_list(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Everything a subcommand needs about one instance.
struct Pipeline {
  Instance instance;
  OneSidedPotential b;
  DeBruijnGraph graph;
  RationalVector weights;
  TropicalSolution sol;

  Pipeline(Instance inst, std::size_t max_nodes)
      : instance(std::move(inst)),
        b(instance.one_sided()),
        graph(instance.sft, b.base_order(), max_nodes),
        weights(compile_weights(b, graph)),
        sol(solve(graph, weights)) {}
};

Instance instance_from(const Options& opt) {
  if (!opt.instance.empty()) return load_instance(opt.instance);
  throw Error(ErrorKind::ParseError, "--instance is required");
}

std::string components_text(const DeBruijnGraph& g, const CriticalStructure& crit) {
  std::ostringstream os;
  for (std::size_t i = 0; i < crit.components.size(); ++i) {
    std::vector<std::string> nodes;
    for (auto v : crit.components[i].nodes) nodes.push_back(g.node_label(v));
    std::vector<std::string> edges;
    for (auto e : crit.components[i].edges) edges.push_back(g.edge_label(e));
    os << "  C" << i + 1 << ": nodes {" << join(nodes, ", ") << "}; edges {" << join(edges, ", ")
       << "}; representative " << g.node_label(crit.components[i].representative) << "\n";
  }
  return os.str();
}

void write_or_print(const Options& opt, const std::string& file, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::filesystem::create_directories(opt.out);
  write_text_file(std::filesystem::path(opt.out) / file, text);
  out << "wrote " << (std::filesystem::path(opt.out) / file).string() << "\n";
}

int cmd_solve(const Options& opt, std::ostream& out) {
  Pipeline p(instance_from(opt), opt.max_nodes);
  const auto& g = p.graph;
  out << "abar = " << to_string(p.sol.summary.abar) << "\n";
  std::string witness = g.node_label(g.edge(p.sol.summary.witness_cycle.front()).tail);
  for (auto e : p.sol.summary.witness_cycle) witness += "->" + g.node_label(g.edge(e).head);
  out << "witness: " << witness << "\n";
  std::vector<std::string> edges;
  for (auto e : p.sol.crit.critical_edges) edges.push_back(g.edge_label(e));
  out << "critical edges: " << join(edges, ", ") << "\n";
  out << "components: " << p.sol.crit.components.size() << "\n" << components_text(g, p.sol.crit);
  auto poly = constraint_polytope(p.sol.crit, p.sol.h);
  out << "constraint matrix H:\n";
  for (const auto& row : poly.bounds) out << "  " << values_line(row) << "\n";
  return kExitOk;
}

int cmd_barrier(const Options& opt, std::ostream& out) {
  Pipeline p(instance_from(opt), opt.max_nodes);
  if (opt.out.empty()) out << "phi:\n";
  write_or_print(opt, "phi.csv", matrix_csv(p.graph, p.sol.phi), out);
  if (opt.out.empty()) out << "h:\n";
  write_or_print(opt, "h.csv", matrix_csv(p.graph, p.sol.h), out);
  return kExitOk;
}

int cmd_calibrate(const Options& opt, std::ostream& out) {
  Pipeline p(instance_from(opt), opt.max_nodes);
  SubAction u;
  if (!opt.dominant.empty()) {
    auto comma = opt.dominant.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::ParseError, "--dominant expects I,U");
    int index = 0;
    try {
      index = std::stoi(opt.dominant.substr(0, comma));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "--dominant index must be an integer");
    }
    if (index < 1 || static_cast<std::size_t>(index) > p.sol.crit.components.size())
      throw Error(ErrorKind::InvalidArgument, "--dominant index must name a component C1..Cr");
    auto d = dominant_calibrated(static_cast<std::size_t>(index - 1), parse_rational(opt.dominant.substr(comma + 1)),
                                 p.sol.crit, p.sol.h, p.graph.order());
    out << "boundary: " << values_line(d.boundary.values) << "\n";
    out << "dominant index unique: " << yes_no(d.index_unique) << "\n";
    u = std::move(d.u);
  } else {
    BoundaryData bd;
    if (!opt.boundary.empty()) bd.values = parse_list(opt.boundary);
    else bd = restrict_to_representatives(
             SubAction{p.graph.order(), calibrated_fixed_point(p.graph, p.weights, p.sol.summary.abar, p.sol.crit)},
             p.sol.crit);
    u = calibrated_from_boundary(bd, p.sol.crit, p.sol.h, p.graph.order());
    out << "boundary: " << values_line(bd.values) << "\n";
  }
  out << "node values: " << values_line(u.values) << "\n";
  out << "fixed point: " << yes_no(lax_oleinik_step(u.values, p.graph, p.weights, p.sol.summary.abar) == u.values)
      << "\n";
  if (!opt.out.empty()) write_or_print(opt, "subaction.csv", subaction_csv(p.graph, u.values), out);
  return kExitOk;
}

int cmd_separate(const Options& opt, std::ostream& out, std::ostream& err) {
  Pipeline p(instance_from(opt), opt.max_nodes);
  SeparatingOptions so;
  so.gamma = parse_rational(opt.gamma);
  so.node_budget = opt.max_nodes;
  int depth = opt.depth ? opt.depth : p.graph.order() + 1;
  auto res = separating_subaction(p.graph, p.weights, p.sol.summary.abar, p.sol.crit, depth, so);
  const int s = p.instance.sft.alphabet_size();
  std::vector<std::string> tight;
  for (const auto& w : res.tight_words) tight.push_back(format_word(w, s));
  if (res.certified) {
    out << "certificate: OK; tight words: " << join(tight, ", ") << "\n";
    out << "certified at depth " << res.certified_at << (res.used_node_barriers ? " (node barriers used)" : "")
        << "\n";
  } else {
    std::vector<std::string> residual;
    for (const auto& w : res.residual_words) residual.push_back(format_word(w, s));
    out << "certificate: FAILED; tight words: " << join(tight, ", ") << "\n";
    out << "residual non-critical tight words: " << join(residual, ", ") << "\n";
  }
  DeBruijnGraph target(p.instance.sft, depth, opt.max_nodes);
  out << "node values: " << values_line(res.u.values) << "\n";
  if (!opt.out.empty()) write_or_print(opt, "subaction.csv", subaction_csv(target, res.u.values), out);
  if (!res.certified) {
    err << "error: " << to_string(ErrorKind::BudgetExceeded) << ": no separating certificate up to depth " << depth
        << "\n";
    return kExitBudget;
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  Pipeline p(instance_from(opt), opt.max_nodes);
  if (opt.subaction.empty()) throw Error(ErrorKind::ParseError, "verify needs a sub-action CSV");
  auto text = read_text_file(opt.subaction);
  const int depth = subaction_csv_depth(text, p.instance.sft.alphabet_size());
  if (depth < p.graph.order()) throw Error(ErrorKind::IncompatibleOrder, "sub-action depth is below the graph order");
  DeBruijnGraph g(p.instance.sft, depth, opt.max_nodes);
  auto u = parse_subaction_csv(text, g);
  auto w = lift_edge_values(p.weights, p.graph, g);
  auto crit = lift_critical(p.sol.crit, p.graph, g);
  auto v = verify(u, g, w, p.sol.summary.abar, crit);
  out << "sub-action: " << yes_no(v.is_subaction) << "; calibrated: " << yes_no(v.is_calibrated)
      << "; separating certificate: " << yes_no(v.separating_certificate) << "\n";
  out << "critical containment: " << yes_no(v.critical_containment) << "\n";
  return kExitOk;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  Instance inst = [&] {
    if (!opt.instance.empty()) return load_instance(opt.instance);
    if (!opt.seed) throw Error(ErrorKind::ParseError, "oracle needs --instance or --seed");
    auto r = random_instance(*opt.seed);
    return Instance{r.sft, r.potential};
  }();
  if (opt.instance.empty()) out << "random instance from seed " << *opt.seed << ":\n" << instance_to_json(inst);
  auto report = cross_check(inst.sft, inst.one_sided());
  for (const auto& line : report.lines) out << line << "\n";
  out << "mismatches: " << report.mismatches << "\n";
  if (report.mismatches) throw Error(ErrorKind::OracleMismatch, std::to_string(report.mismatches) + " oracle checks failed");
  return kExitOk;
}

int cmd_info(const Options& opt, std::ostream& out) {
  auto inst = instance_from(opt);
  const auto& sft = inst.sft;
  out << "alphabet size: " << sft.alphabet_size() << "\n";
  out << "lambda: " << to_string(sft.lambda()) << "\n";
  out << "transition:\n";
  for (const auto& row : sft.matrix()) {
    out << " ";
    for (int x : row) out << " " << x;
    out << "\n";
  }
  if (const auto* two = std::get_if<TwoSidedPotential>(&inst.potential))
    out << "potential: two-sided, past depth " << two->past_depth() << ", future depth " << two->future_depth()
        << "\n";
  auto b = inst.one_sided();
  out << "potential: one-sided range " << b.range() << "\n";
  DeBruijnGraph g(sft, b.base_order(), opt.max_nodes);
  out << "graph order " << g.order() << ": " << g.node_count() << " nodes, " << g.edge_count() << " edges\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ergodic optimization on subshifts of finite type"};
  app.require_subcommand(1);
  Options opt;

  auto add_instance = [&](CLI::App* sub) { sub->add_option("--instance", opt.instance, "Instance JSON file"); };
  auto add_common = [&](CLI::App* sub) {
    add_instance(sub);
    sub->add_option("--max-nodes", opt.max_nodes, "Node budget for refined graphs");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Minimizing value, witness cycle and critical components");
  add_common(solve_cmd);
  auto* barrier_cmd = app.add_subcommand("barrier", "Mane potential and Peierls barrier as CSV");
  add_common(barrier_cmd);
  barrier_cmd->add_option("--out", opt.out, "Directory for phi.csv and h.csv");
  auto* calibrate_cmd = app.add_subcommand("calibrate", "Calibrated sub-action from boundary data");
  add_common(calibrate_cmd);
  calibrate_cmd->add_option("--boundary", opt.boundary, "Values u_1,...,u_r on the components");
  calibrate_cmd->add_option("--dominant", opt.dominant, "Component index (from 1) and value: I,U");
  calibrate_cmd->add_option("--out", opt.out, "Directory for subaction.csv");
  auto* separate_cmd = app.add_subcommand("separate", "Separating sub-action at finite depth");
  add_common(separate_cmd);
  separate_cmd->add_option("--depth", opt.depth, "Target depth (default: graph order + 1)");
  separate_cmd->add_option("--gamma", opt.gamma, "Perturbation size in (0,1)");
  separate_cmd->add_option("--out", opt.out, "Directory for subaction.csv");
  auto* verify_cmd = app.add_subcommand("verify", "Check a sub-action CSV");
  add_common(verify_cmd);
  verify_cmd->add_option("subaction,--subaction", opt.subaction, "CSV with rows node,value");
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-check");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--seed", opt.seed, "Check a random instance instead of --instance");
  auto* info_cmd = app.add_subcommand("info", "Describe an instance");
  add_common(info_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*solve_cmd) return cmd_solve(opt, out);
    if (*barrier_cmd) return cmd_barrier(opt, out);
    if (*calibrate_cmd) return cmd_calibrate(opt, out);
    if (*separate_cmd) return cmd_separate(opt, out, err);
    if (*verify_cmd) return cmd_verify(opt, out);
    if (*oracle_cmd) return cmd_oracle(opt, out);
    if (*info_cmd) return cmd_info(opt, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitParse;
}

}  // namespace ergo
