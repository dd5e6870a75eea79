#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oidom/cli.hpp"
#include "oidom/family_json.hpp"
#include "oidom/families.hpp"
#include "oidom/graph6.hpp"
#include "oidom/reductions.hpp"
#include "oidom/solvers.hpp"
#include "oidom/sweep.hpp"

namespace oidom::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

// "auto" picks the edge-list reader when the first non-blank line starts
// with a digit, graph6 otherwise.
Graph read_graph(const std::string& path, const std::string& format) {
  const std::string text = read_text(path);
  std::string fmt = format;
  if (fmt == "auto") {
    const auto first = text.find_first_not_of(" \t\r\n");
    fmt = (first != std::string::npos && std::isdigit(static_cast<unsigned char>(text[first])) &&
           text.find_first_of(" \t", first) < text.find('\n', first))
              ? "edgelist"
              : "g6";
  }
  if (fmt == "edgelist") return parse_edge_list_text(text);
  std::istringstream in(text);
  std::vector<Graph> graphs = read_graph6_lines(in);
  if (graphs.size() != 1) {
    throw UsageError("expected exactly one graph in '" + path + "', found " + std::to_string(graphs.size()));
  }
  return graphs.front();
}

std::string format_graph(const Graph& g, const std::string& format) {
  return format == "edgelist" ? to_edge_list(g) : to_graph6(g) + "\n";
}

ParamKind param_from(const std::string& key) {
  if (auto k = parse_param_key(key)) return *k;
  throw UsageError("unknown parameter '" + key + "' (toid, 2oid, doid, alpha, gamma, gamma-t, gamma-x2)");
}

VertexSet parse_set(const std::string& text, int n) {
  VertexSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("vertex '" + item + "' is not an integer");
    if (v < 0 || v >= n) throw UsageError("vertex " + item + " outside 0.." + std::to_string(n - 1));
    s.insert(v);
  }
  return s;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("'" + item + "' is not an integer");
    }
  }
  return out;
}

struct FamilyFlags {
  std::string family;
  std::string spec_file;
  std::optional<int> n, p, a, b, c, q, k, r, p_size, q_size;
  std::string extra_leaves;
  std::uint64_t seed = 0;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--n", f.n, "order (phi, psi, classic)");
  cmd->add_option("--p", f.p, "clique size (phi), u count (omega), block size (h)");
  cmd->add_option("--a", f.a, "|A| (lambda), a (omega), side (biclique)");
  cmd->add_option("--b", f.b, "|B| (lambda), b (omega), side (biclique)");
  cmd->add_option("--c", f.c, "|C| (lambda)");
  cmd->add_option("--q", f.q, "clique size (theta)");
  cmd->add_option("--k", f.k, "k (h, grid)");
  cmd->add_option("--r", f.r, "attachment degree (omega)");
  cmd->add_option("--p-size", f.p_size, "|P| (gcal)");
  cmd->add_option("--q-size", f.q_size, "|Q| (gcal)");
  cmd->add_option("--extra-leaves", f.extra_leaves, "comma-separated leaf counts (omega)");
  cmd->add_option("--seed", f.seed, "seed for randomized choices")->default_val(0);
}

FamilySpec spec_from_flags(const FamilyFlags& f) {
  if (!f.spec_file.empty()) return family_spec_from_json(nlohmann::json::parse(read_text(f.spec_file)));
  if (f.family.rfind("classic:", 0) == 0) {
    ClassicSpec s;
    s.name = f.family.substr(8);
    s.n = f.n.value_or(s.n);
    s.a = f.a.value_or(s.a);
    s.b = f.b.value_or(s.b);
    return s;
  }
  const auto tag = parse_family_key(f.family);
  if (!tag || *tag == FamilyTag::Classic) {
    throw UsageError("unknown family '" + f.family + "' (lambda, phi, psi, omega, gcal, theta, h, grid, classic:NAME)");
  }
  switch (*tag) {
    case FamilyTag::Lambda: return LambdaSpec{f.a.value_or(1), f.b.value_or(1), f.c.value_or(1)};
    case FamilyTag::Phi: {
      PhiSpec s;
      s.n = f.n.value_or(s.n);
      s.p = f.p.value_or(s.p);
      s.seed = f.seed;
      return s;
    }
    case FamilyTag::Psi: {
      PsiSpec s;
      s.n = f.n.value_or(s.n);
      s.seed = f.seed;
      return s;
    }
    case FamilyTag::Omega: {
      OmegaSpec s;
      s.a = f.a.value_or(s.a);
      s.b = f.b.value_or(s.b);
      s.p = f.p.value_or(s.p);
      s.r = f.r.value_or(s.r);
      s.extra_leaves = f.extra_leaves.empty() ? std::vector<int>(std::max(s.b, 0), 0) : parse_int_list(f.extra_leaves);
      s.seed = f.seed;
      return s;
    }
    case FamilyTag::GCal: {
      GCalSpec s;
      s.p_size = f.p_size.value_or(s.p_size);
      s.q_size = f.q_size.value_or(s.q_size);
      s.seed = f.seed;
      return s;
    }
    case FamilyTag::Theta: return ThetaSpec{f.q.value_or(3)};
    case FamilyTag::HFamily: return HSpec{f.k.value_or(2), f.p.value_or(0)};
    case FamilyTag::Grid: return GridSpec{f.k.value_or(1)};
    case FamilyTag::Classic: break;
  }
  throw UsageError("unknown family '" + f.family + "'");
}

std::vector<TheoremId> parse_theorems(const std::string& text) {
  if (text == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
  std::vector<TheoremId> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto id = parse_theorem_key(item);
    if (!id) throw UsageError("unknown theorem '" + item + "'");
    if (std::find(ids.begin(), ids.end(), *id) == ids.end()) ids.push_back(*id);
  }
  if (ids.empty()) throw UsageError("no theorems selected");
  return ids;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact outer-independent domination parameters, extremal families and bound checking.", "oidom"};
  app.require_subcommand(1);

  // compute
  std::string param, input, format = "auto", set_text;
  bool as_json = false;
  auto* compute = app.add_subcommand("compute", "Solve one parameter exactly, with a certificate");
  compute->add_option("--param", param, "toid|2oid|doid|alpha|gamma|gamma-t|gamma-x2")->required();
  compute->add_option("--input", input, "graph file ('-' for stdin)")->required();
  compute->add_option("--format", format, "g6|edgelist|auto")->check(CLI::IsMember({"g6", "edgelist", "auto"}));
  compute->add_flag("--json", as_json, "machine-readable output");

  // validate-set
  auto* validate = app.add_subcommand("validate-set", "Check a vertex set against a parameter's definition");
  validate->add_option("--param", param, "parameter key")->required();
  validate->add_option("--set", set_text, "comma-separated 0-indexed vertices")->required();
  validate->add_option("--input", input, "graph file ('-' for stdin)")->required();
  validate->add_option("--format", format, "g6|edgelist|auto")->check(CLI::IsMember({"g6", "edgelist", "auto"}));

  // generate
  FamilyFlags fam;
  std::string out_path, out_format = "g6";
  auto* generate_cmd = app.add_subcommand("generate", "Build a member of an extremal family");
  auto* family_opt = generate_cmd->add_option("--family", fam.family, "lambda|phi|psi|omega|gcal|theta|h|grid|classic:NAME");
  auto* spec_opt = generate_cmd->add_option("--spec", fam.spec_file, "JSON family spec instead of flags");
  family_opt->excludes(spec_opt);
  add_family_flags(generate_cmd, fam);
  generate_cmd->add_option("--out", out_path, "output file (stdout if absent)");
  generate_cmd->add_option("--out-format", out_format, "g6|edgelist")->check(CLI::IsMember({"g6", "edgelist"}));

  // recognize
  auto* recognize_cmd = app.add_subcommand("recognize", "Test family membership");
  recognize_cmd->add_option("--family", fam.family, "lambda|phi|psi|omega|gcal|theta|h|grid|classic:NAME")->required();
  recognize_cmd->add_option("--input", input, "graph file ('-' for stdin)")->required();
  recognize_cmd->add_option("--format", format, "g6|edgelist|auto")->check(CLI::IsMember({"g6", "edgelist", "auto"}));

  // reduce
  std::string kind_text;
  bool verify = false;
  std::uint64_t budget = 0;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build a gadget graph from an independence instance");
  reduce_cmd->add_option("--kind", kind_text, "2oid|doid")->required()->check(CLI::IsMember({"2oid", "doid"}));
  reduce_cmd->add_option("--input", input, "graph file ('-' for stdin)")->required();
  reduce_cmd->add_option("--format", format, "g6|edgelist|auto")->check(CLI::IsMember({"g6", "edgelist", "auto"}));
  reduce_cmd->add_flag("--verify", verify, "solve both sides and check gamma(G') = 3n - alpha(G)");
  reduce_cmd->add_option("--budget", budget, "search node cap for --verify (0 = none)");
  reduce_cmd->add_option("--out", out_path, "gadget output file");
  reduce_cmd->add_option("--out-format", out_format, "g6|edgelist")->check(CLI::IsMember({"g6", "edgelist"}));

  // sweep
  SweepOptions sw;
  std::string theorems_text = "all", mode_text = "labeled", report_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check every registered theorem over enumerated graphs");
  sweep_cmd->add_option("--n-min", sw.n_min, "smallest order")->default_val(4);
  sweep_cmd->add_option("--n-max", sw.n_max, "largest order")->default_val(6);
  sweep_cmd->add_option("--theorems", theorems_text, "comma-separated ids or 'all'");
  sweep_cmd->add_option("--mode", mode_text, "labeled|canonical|file")
      ->check(CLI::IsMember({"labeled", "canonical", "file"}));
  sweep_cmd->add_option("--input", sw.source, "graph6 file for --mode file");
  sweep_cmd->add_option("--jobs", sw.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--report", report_path, "write the JSON report here (stdout if absent)");
  sweep_cmd->add_option("--np-max-order", sw.check.np_max_order, "largest order for the gadget identity");
  sweep_cmd->add_flag("--allow-n8", sw.allow_large, "permit order 8 (268M labeled graphs)");
  sweep_cmd->add_flag("--timing", sw.timing, "add wall_ms to the report");

  // fixtures
  bool list = false;
  std::string emit;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List or emit the fixed example graphs");
  auto* list_opt = fixtures_cmd->add_flag("--list", list, "list fixture names");
  auto* emit_opt = fixtures_cmd->add_option("--emit", emit, "H1|H2|PSI_FIG1|OMEGA_FIG3");
  list_opt->excludes(emit_opt);
  fixtures_cmd->add_option("--out", out_path, "output file (stdout if absent)");
  fixtures_cmd->add_option("--out-format", out_format, "g6|edgelist")->check(CLI::IsMember({"g6", "edgelist"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      const ParamKind kind = param_from(param);
      const Graph g = read_graph(input, format);
      const ParamResult r = solve(g, kind);
      if (as_json) {
        nlohmann::ordered_json j;
        j["param"] = std::string(param_key(kind));
        j["symbol"] = std::string(param_symbol(kind));
        j["n"] = g.order();
        if (r.defined()) {
          j["value"] = *r.value;
          j["certificate"] = r.certificate.to_vector();
        } else {
          j["value"] = nullptr;
          j["undefined"] = "isolated vertex";
        }
        out << j.dump(2) << "\n";
      } else if (r.defined()) {
        out << param_symbol(kind) << " = " << *r.value << "\n";
        out << "certificate = " << r.certificate.to_string() << "\n";
      } else {
        out << param_symbol(kind) << " = undefined (isolated vertex)\n";
      }
      return kExitOk;
    }

    if (validate->parsed()) {
      const ParamKind kind = param_from(param);
      const Graph g = read_graph(input, format);
      const VertexSet s = parse_set(set_text, g.order());
      if (auto why = first_violation(g, s, kind)) {
        out << "invalid: " << *why << "\n";
        return kExitViolation;
      }
      out << "valid: " << s.to_string() << " is a " << param_symbol(kind) << " set\n";
      return kExitOk;
    }

    if (generate_cmd->parsed()) {
      if (fam.family.empty() && fam.spec_file.empty()) throw UsageError("generate needs --family or --spec");
      const Graph g = generate(spec_from_flags(fam));
      write_text(out_path, format_graph(g, out_format), out);
      return kExitOk;
    }

    if (recognize_cmd->parsed()) {
      const Graph g = read_graph(input, format);
      bool member = false;
      if (fam.family.rfind("classic:", 0) == 0) {
        member = recognize_classic(g, fam.family.substr(8));
      } else {
        const auto tag = parse_family_key(fam.family);
        if (!tag || *tag == FamilyTag::Classic) throw UsageError("unknown family '" + fam.family + "'");
        member = recognize(g, *tag);
      }
      out << fam.family << ": " << (member ? "member" : "not a member") << "\n";
      return kExitOk;
    }

    if (reduce_cmd->parsed()) {
      const ReductionKind kind = *parse_reduction_key(kind_text);
      const Graph g = read_graph(input, format);
      const Graph gadget = reduce(g, kind);
      if (!out_path.empty() || !verify) write_text(out_path, format_graph(gadget, out_format), out);
      if (!verify) return kExitOk;
      const ReductionReport r = verify_reduction(g, kind, SearchBudget{budget});
      const std::string sym(param_symbol(target_param(kind)));
      out << "n = " << r.order << "\n";
      if (r.alpha) out << "alpha = " << *r.alpha << "\n";
      if (r.param_on_gadget) out << sym << "(G') = " << *r.param_on_gadget << "\n";
      if (r.alpha) out << "3n - alpha = " << r.expected << "\n";
      out << "identity " << status_key(r.status) << "\n";
      return r.identity_holds() ? kExitOk : kExitViolation;
    }

    if (sweep_cmd->parsed()) {
      sw.mode = *parse_mode_key(mode_text);
      sw.theorems = parse_theorems(theorems_text);
      if (sw.mode == EnumerationMode::File && sw.source.empty()) throw UsageError("--mode file needs --input");
      if (sw.allow_large && sw.n_max >= kLargeEnumerationCeiling && sw.mode == EnumerationMode::Labeled) {
        err << "order 8 labeled sweep: " << labeled_count(8) << " graphs\n";
      }
      const SweepReport report = sweep(sw);
      const std::string text = report_json_text(report);
      if (report_path.empty()) {
        out << text;
      } else {
        write_text(report_path, text, out);
        for (const TheoremTally& t : report.theorems) {
          out << theorem_key(t.id) << " checked=" << t.checked << " skipped=" << t.skipped
              << " violations=" << t.violations_total << " equality=" << t.equality_total << "\n";
        }
        out << (report.passed() ? "all theorems hold" : "violations found") << "\n";
      }
      if (report.wall_ms) err << "wall_ms = " << *report.wall_ms << "\n";
      return report.passed() ? kExitOk : kExitViolation;
    }

    if (fixtures_cmd->parsed()) {
      if (list || emit.empty()) {
        for (Fixture f : kAllFixtures) {
          const Graph g = fixture(f);
          out << fixture_key(f) << " n=" << g.order() << " m=" << g.size() << "\n";
        }
        return kExitOk;
      }
      write_text(out_path, format_graph(fixture(std::string_view(emit)), out_format), out);
      return kExitOk;
    }
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace oidom::cli
