#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tourney/error.hpp"
#include "tourney/io.hpp"
#include "tourney/paper36.hpp"
#include "tourney/search.hpp"
#include "tourney/solutions.hpp"
#include "tourney/verify.hpp"

namespace tourney::cli {

namespace {

// Reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  Tournament load(const std::string& path) {
    std::string text;
    if (path == "-") {
      std::ostringstream buf;
      buf << in_.rdbuf();
      text = buf.str();
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw UsageError("cannot open " + path);
      std::ostringstream buf;
      buf << f.rdbuf();
      text = buf.str();
    }
    const std::string name = path == "-" ? "<stdin>" : path;
    try {
      return parse_tournament(text);
    } catch (const ParseError& e) {
      throw UsageError(name + ": " + e.what());
    } catch (const InvalidTournament& e) {
      throw UsageError(name + ": invalid tournament: " + e.what());
    }
  }

  void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

// Paper labels accompany ids on order-36 tournaments.
std::string describe(const Tournament& t, Alternative x) {
  if (t.order() == paper36::kOrder) return paper36::label(x) + " " + std::to_string(x);
  return std::to_string(x);
}

int cmd_gen_paper36(Session& s, const std::optional<std::uint64_t>& variant_seed, const std::string& out) {
  const Tournament t = variant_seed ? paper36::build_t36_variant(paper36::random_orientations(*variant_seed))
                                    : paper36::build_t36();
  s.emit(out, format_tournament(t));
  return kExitOk;
}

int cmd_gen_random(Session& s, std::size_t n, std::uint64_t seed, const std::string& out) {
  if (n == 0 || n > kMaxOrder) throw UsageError("--n must be in [1, 64]");
  s.emit(out, format_tournament(random_tournament(n, seed)));
  return kExitOk;
}

int cmd_solve(Session& s, const std::string& file, const std::string& rule_text, bool witness) {
  const Tournament t = s.load(file);
  const RuleId rule = parse_rule(rule_text);
  if (rule == RuleId::kBipartisan) {
    const BipartisanResult bp = bipartisan_set(t);
    for (std::size_t x : bp.support.members()) {
      s.out() << describe(t, x) << " p=" << to_fraction_string(bp.lottery[x]) << "\n";
    }
    return kExitOk;
  }
  if (rule == RuleId::kBanks && witness) {
    for (std::size_t x = 0; x < t.order(); ++x) {
      const BanksMembership m = banks_member(t, x);
      if (!m.member) continue;
      s.out() << describe(t, x) << " chain=" << x;
      for (Alternative b : *m.witness) s.out() << ">" << b;
      s.out() << "\n";
    }
    return kExitOk;
  }
  for (std::size_t x : apply_rule(t, rule).members()) s.out() << describe(t, x) << "\n";
  return kExitOk;
}

int cmd_verify(Session& s, const std::string& file, const std::string& report_path, bool skip_orbits,
               unsigned workers) {
  const Tournament t = file.empty() ? paper36::build_t36() : s.load(file);
  if (t.order() != paper36::kOrder) throw UsageError("verify-paper needs an order-36 tournament");
  paper36::VerifyOptions opts;
  opts.check_automorphisms = !skip_orbits;
  opts.workers = workers;
  const paper36::VerificationReport report = paper36::verify_theorem(t, opts);
  for (const paper36::CheckResult& c : report.checks) {
    s.out() << "[" << paper36::to_string(c.status) << "] " << c.name << ": " << c.detail << "\n";
  }
  s.out() << (report.passed() ? "PASS" : "FAIL") << "\n";
  if (!report_path.empty()) s.emit(report_path, report_to_json(report));
  return report.passed() ? kExitOk : kExitFinding;
}

int cmd_scan(Session& s, const std::string& rules, std::size_t min_order, std::size_t max_order,
             const std::string& mode, std::size_t samples, std::uint64_t seed, unsigned workers,
             const std::string& witness_dir) {
  const auto comma = rules.find(',');
  if (comma == std::string::npos) throw UsageError("--rules expects A,B");
  ScanConfig cfg;
  cfg.rule_a = parse_rule(rules.substr(0, comma));
  cfg.rule_b = parse_rule(rules.substr(comma + 1));
  cfg.mode = mode == "random" ? ScanMode::kRandom : ScanMode::kExhaustive;
  cfg.max_order = max_order;
  cfg.min_order = min_order != 0 ? min_order : (cfg.mode == ScanMode::kRandom ? max_order : 1);
  cfg.sample_count = samples;
  cfg.seed = seed;
  cfg.workers = workers;
  const ScanOutcome outcome = scan_separation(cfg);
  for (const OrderScan& o : outcome.orders) {
    s.out() << "order " << o.order << ": generated " << o.generated << ", examined " << o.examined
            << ", witnesses " << o.witnesses.size() << "\n";
  }
  if (!witness_dir.empty() && outcome.witness_count() > 0) {
    std::filesystem::create_directories(witness_dir);
    for (const OrderScan& o : outcome.orders) {
      for (std::size_t k = 0; k < o.witnesses.size(); ++k) {
        const auto path = std::filesystem::path(witness_dir) /
                          ("witness_n" + std::to_string(o.order) + "_" + std::to_string(k) + ".txt");
        write_tournament(o.witnesses[k], path);
      }
    }
  }
  s.out() << "total witnesses: " << outcome.witness_count() << "\n";
  return outcome.witness_count() == 0 ? kExitOk : kExitFinding;
}

int cmd_export_dot(Session& s, const std::string& file, const std::string& out, bool clusters) {
  const Tournament t = s.load(file);
  DotOptions opts;
  if (t.order() == paper36::kOrder) {
    for (std::size_t x = 0; x < t.order(); ++x) opts.labels.push_back(describe(t, x));
  } else if (clusters) {
    throw UsageError("--clusters needs an order-36 tournament");
  }
  opts.paper_clusters = clusters;
  s.emit(out, export_dot(t, opts));
  return kExitOk;
}

int cmd_orbits(Session& s, const std::string& file) {
  const Tournament t = s.load(file);
  if (t.order() != paper36::kOrder) throw UsageError("orbits needs an order-36 tournament");
  const std::vector<Permutation> gens = paper36::generators();
  const char* names[] = {"phi", "psi_1", "psi_2", "psi_3"};
  bool ok = true;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!is_automorphism(t, gens[k])) {
      s.err() << names[k] << " is not an automorphism of this tournament\n";
      ok = false;
    }
  }
  if (!ok) return kExitFinding;
  const std::vector<ChoiceSet> orb = paper36::orbits(t, gens);
  for (std::size_t k = 0; k < orb.size(); ++k) {
    s.out() << "orbit " << k + 1 << " (" << orb[k].size() << "):";
    for (std::size_t x : orb[k].members()) s.out() << " " << paper36::label(x) << "=" << x;
    s.out() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tournament solutions: Banks set, bipartisan set and the order-36 separating tournament",
               args.empty() ? "tourney" : args.front()};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a tournament file");
  gen->require_subcommand(1);
  auto* gen_paper = gen->add_subcommand("paper36", "The order-36 construction");
  std::optional<std::uint64_t> variant_seed;
  std::string gen_out = "-";
  gen_paper->add_option("--variant-seed", variant_seed, "Randomly reorient the nine outer triangles");
  gen_paper->add_option("-o,--output", gen_out, "Output file ('-' for stdout)");

  auto* gen_random = gen->add_subcommand("random", "Uniformly random labeled tournament");
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  gen_random->add_option("--n", gen_n, "Order")->required();
  gen_random->add_option("--seed", gen_seed, "Seed");
  gen_random->add_option("-o,--output", gen_out, "Output file ('-' for stdout)");

  auto* solve = app.add_subcommand("solve", "Apply a solution concept");
  std::string solve_file = "-";
  std::string solve_rule;
  bool solve_witness = false;
  solve->add_option("file", solve_file, "Tournament file ('-' for stdin)");
  solve->add_option("--rule", solve_rule, "copeland | tc | uc | banks | bp")
      ->required()
      ->check(CLI::IsMember({"copeland", "tc", "uc", "banks", "bp"}));
  solve->add_flag("--witness", solve_witness, "With --rule banks: print a witness chain per member");

  auto* verify = app.add_subcommand("verify-paper", "Verify the partition theorem on the order-36 construction");
  std::string verify_file;
  std::string report_path;
  bool skip_orbits = false;
  unsigned verify_workers = 1;
  verify->add_option("file", verify_file, "Order-36 tournament file (default: built in)");
  verify->add_option("--report", report_path, "Write a JSON report");
  verify->add_flag("--skip-orbits", skip_orbits, "Skip the automorphism check (reoriented variants)");
  verify->add_option("--workers", verify_workers, "Threads for the Banks computation")->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "Search small tournaments for disjoint choice sets");
  std::string scan_rules;
  std::size_t scan_min = 0;
  std::size_t scan_max = 0;
  std::string scan_mode = "exhaustive";
  std::size_t scan_samples = 1000;
  std::uint64_t scan_seed = 0;
  unsigned scan_workers = 1;
  std::string witness_dir;
  scan->add_option("--rules", scan_rules, "Two rules, e.g. banks,bp")->required();
  scan->add_option("--max-order", scan_max, "Largest order")->required()->check(CLI::PositiveNumber);
  scan->add_option("--min-order", scan_min, "Smallest order (default 1, or max-order in random mode)");
  scan->add_option("--mode", scan_mode, "exhaustive | random")->check(CLI::IsMember({"exhaustive", "random"}));
  scan->add_option("--samples", scan_samples, "Samples per order in random mode")->check(CLI::PositiveNumber);
  scan->add_option("--seed", scan_seed, "Master seed in random mode");
  scan->add_option("--workers", scan_workers, "Threads")->check(CLI::PositiveNumber);
  scan->add_option("--witness-dir", witness_dir, "Write witness tournaments here");

  auto* dot = app.add_subcommand("export-dot", "Graphviz export");
  std::string dot_file = "-";
  std::string dot_out = "-";
  bool clusters = false;
  dot->add_option("file", dot_file, "Tournament file ('-' for stdin)");
  dot->add_option("-o,--output", dot_out, "Output file ('-' for stdout)");
  dot->add_flag("--clusters", clusters, "Order 36: group blocks and triangles");

  auto* orbits = app.add_subcommand("orbits", "Orbits of the order-36 automorphisms");
  std::string orbits_file = "-";
  orbits->add_option("file", orbits_file, "Order-36 tournament file ('-' for stdin)");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("tourney");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Session session(in, out, err);
  try {
    if (*gen_paper) return cmd_gen_paper36(session, variant_seed, gen_out);
    if (*gen_random) return cmd_gen_random(session, gen_n, gen_seed, gen_out);
    if (*solve) return cmd_solve(session, solve_file, solve_rule, solve_witness);
    if (*verify) return cmd_verify(session, verify_file, report_path, skip_orbits, verify_workers);
    if (*scan) {
      return cmd_scan(session, scan_rules, scan_min, scan_max, scan_mode, scan_samples, scan_seed, scan_workers,
                      witness_dir);
    }
    if (*dot) return cmd_export_dot(session, dot_file, dot_out, clusters);
    if (*orbits) return cmd_orbits(session, orbits_file);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tourney::cli
