// Command-line front end: every subcommand computes a table and emits it in
// the selected format. Output on stdout is deterministic; notes and warnings
// go to stderr.

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/acceptable.hpp"
#include "hurwitz/boundary.hpp"
#include "hurwitz/chain_file.hpp"
#include "hurwitz/cover_class.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/splitting_type.hpp"
#include "hurwitz/table.hpp"

namespace {

using namespace hurwitz;

struct Options {
  int d = 0;
  int g = 0;
  std::string format = "csv";
  std::string condition3 = "gap";
  std::string chain_file;
  std::optional<int> j;
  std::string mu;
  std::optional<int> a1;
  std::optional<int> twist;
  bool strict = false;
};

AcceptabilityConfig config_of(const Options& opt) {
  AcceptabilityConfig cfg;
  cfg.condition3 =
      opt.condition3 == "literal" ? Condition3::Literal : Condition3::Gap;
  return cfg;
}

void emit(const Table& table, const std::string& format) {
  if (format == "json")
    std::cout << to_json(table);
  else if (format == "tex")
    std::cout << to_tex(table);
  else
    std::cout << to_csv(table);
}

Partition parse_mu_option(const std::string& text) {
  Partition mu = Partition::parse(text);
  if (mu.str() != text)
    std::cerr << "warning: partition '" << text << "' re-sorted to '" << mu.str()
              << "'\n";
  return mu;
}

std::string joined(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::unique_ptr<ChainDataSource> chain_source(const Options& opt) {
  if (!opt.chain_file.empty())
    return std::make_unique<FileChainSource>(FileChainSource::load(opt.chain_file));
  std::cerr << "note: no chain-data file given; using conventions m = lcm(mu), "
               "c = 0, delta constant 0, e = (m/2, (m-1)/2, ..., 0)\n";
  return std::make_unique<DefaultChainSource>();
}

int run_decompose(const Options& opt) {
  const CoverClass cc = CoverClass::decompose(opt.d, opt.g);
  Table t{{"d", "g", "k", "s", "b"},
          {{std::to_string(cc.d()), std::to_string(cc.g()), std::to_string(cc.k()),
            std::to_string(cc.s()), std::to_string(cc.b())}}};
  emit(t, opt.format);
  return 0;
}

int run_splitting(const Options& opt) {
  const CoverClass cc = CoverClass::decompose(opt.d, opt.g);
  const SplittingType generic = generic_pushforward(cc);
  const SplittingType with_divisor = balanced_pushforward_with_divisor(cc);
  Table t{{"bundle", "exponents"},
          {{"generic", generic.str()},
           {"generic_cokernel_dual", cokernel_dual_type(generic).str()},
           {"with_divisor", with_divisor.str()},
           {"with_divisor_cokernel_dual", cokernel_dual_type(with_divisor).str()}}};
  emit(t, opt.format);
  return 0;
}

int run_cohomology(const Options& opt) {
  const CoverClass cc = CoverClass::decompose(opt.d, opt.g);
  const int twist = opt.twist.value_or(cc.k());
  const auto [h0, h1] = twisted_section_counts(cc, twist);
  Table t{{"twist", "h0", "h1"},
          {{std::to_string(twist), std::to_string(h0), std::to_string(h1)}}};
  emit(t, opt.format);
  return 0;
}

int run_acceptable(const Options& opt) {
  const CoverClass cc = CoverClass::decompose(opt.d, opt.g);
  Table t{{"tuple"}, {}};
  for (const auto& tuple : enumerate_acceptable(cc, config_of(opt), opt.a1))
    t.rows.push_back({joined(tuple)});
  emit(t, opt.format);
  return 0;
}

int run_maximize(const Options& opt) {
  const CoverClass cc = CoverClass::decompose(opt.d, opt.g);
  const int first = opt.a1.value_or(cc.k());
  Table t{{"tuple"}, {{joined(maximize(cc, first, config_of(opt)))}}};
  emit(t, opt.format);
  return 0;
}

int run_gate(const Options& opt) {
  const bool open = divisorial_gate(opt.d, opt.g);
  Table t{{"d", "g", "divisor", "reason"},
          {{std::to_string(opt.d), std::to_string(opt.g), open ? "true" : "false",
            divisorial_gate_reason(opt.d, opt.g)}}};
  emit(t, opt.format);
  if (opt.strict && !open) {
    std::cerr << "gate: " << divisorial_gate_reason(opt.d, opt.g) << "\n";
    return 1;
  }
  return 0;
}

int run_greedy(const Options& opt) {
  const CoverClass cc = CoverClass::decompose(opt.d, opt.g);
  const GreedyTrajectory tr = greedy_trajectory(cc);
  Table t{{"steps", "residual_degree", "branch_count"},
          {{joined(tr.steps), std::to_string(tr.residual_degree),
            std::to_string(tr.branch_count)}}};
  emit(t, opt.format);
  return 0;
}

int run_strata(const Options& opt) {
  const CoverClass cc = CoverClass::decompose(opt.d, opt.g);
  Table t{{"j", "mu"}, {}};
  for (const auto& label : enumerate_strata(cc))
    t.rows.push_back({std::to_string(label.j), label.mu.str()});
  emit(t, opt.format);
  return 0;
}

std::vector<std::string> sigma_row_cells(const SigmaRow& row) {
  return {std::to_string(row.label.j), row.label.mu.str(), std::to_string(row.m),
          to_string(row.sigma), row.provenance};
}

int run_sigma(const Options& opt) {
  const CoverClass cc = CoverClass::decompose(opt.d, opt.g);
  if (!opt.j || opt.mu.empty()) {
    std::cerr << "sigma: --j and --mu are required\n";
    return 2;
  }
  const StratumLabel label(*opt.j, parse_mu_option(opt.mu), cc.b());
  const auto source = chain_source(opt);
  const SourcedChainData sourced = source->get(cc, label);
  const SigmaRow row{label, sourced.data.m,
                     sigma(cc, label.j, label.mu, sourced.data), sourced.provenance};
  Table t{{"j", "mu", "m", "sigma", "provenance"}, {sigma_row_cells(row)}};
  emit(t, opt.format);
  return 0;
}

int run_table(const Options& opt) {
  const CoverClass cc = CoverClass::decompose(opt.d, opt.g);
  const auto source = chain_source(opt);
  Table t{{"j", "mu", "m", "sigma", "provenance"}, {}};
  for (const auto& row : sigma_table(cc, *source)) t.rows.push_back(sigma_row_cells(row));
  emit(t, opt.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of simply-branched covers of the line: "
               "splitting types, acceptable tuples, boundary strata and their "
               "sigma coefficients"};
  app.require_subcommand(1);

  Options opt;
  int (*handler)(const Options&) = nullptr;

  const auto add_common = [&](CLI::App* cmd, bool needs_g = true) {
    cmd->add_option("--d", opt.d, "degree of the cover")->required();
    cmd->add_option("--g", opt.g, "genus of the source curve")->required();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "tex"}))
        ->default_val("csv");
    (void)needs_g;
  };

  auto* decompose = app.add_subcommand("decompose", "invariants k, s, b of (d, g)");
  add_common(decompose);
  decompose->callback([&] { handler = run_decompose; });

  auto* splitting = app.add_subcommand(
      "splitting", "generic pushforward splitting types and cokernel duals");
  add_common(splitting);
  splitting->callback([&] { handler = run_splitting; });

  auto* cohomology = app.add_subcommand(
      "cohomology", "section counts of the twisted generic pushforward");
  add_common(cohomology);
  int twist_arg = 0;
  auto* twist_opt =
      cohomology->add_option("--twist", twist_arg, "twist to apply (default: k)");
  cohomology->callback([&, twist_opt] {
    if (twist_opt->count() > 0) opt.twist = twist_arg;
    handler = run_cohomology;
  });

  auto* acceptable = app.add_subcommand("acceptable", "all acceptable tuples");
  add_common(acceptable);
  int a1_arg = 0;
  auto* a1_opt = acceptable->add_option("--a1", a1_arg,
                                        "restrict to tuples with this first entry");
  acceptable->add_option("--condition3", opt.condition3, "third-condition reading")
      ->check(CLI::IsMember({"gap", "literal"}))
      ->default_val("gap");
  acceptable->callback([&, a1_opt] {
    if (a1_opt->count() > 0) opt.a1 = a1_arg;
    handler = run_acceptable;
  });

  auto* maximize_cmd = app.add_subcommand(
      "maximize", "acceptable tuple maximizing the weighted sum");
  add_common(maximize_cmd);
  int max_a1_arg = 0;
  auto* max_a1_opt =
      maximize_cmd->add_option("--a1", max_a1_arg, "first entry (default: k)");
  maximize_cmd->add_option("--condition3", opt.condition3, "third-condition reading")
      ->check(CLI::IsMember({"gap", "literal"}))
      ->default_val("gap");
  maximize_cmd->callback([&, max_a1_opt] {
    if (max_a1_opt->count() > 0) opt.a1 = max_a1_arg;
    handler = run_maximize;
  });

  auto* gate = app.add_subcommand("gate", "divisorial-existence gate for (d, g)");
  add_common(gate);
  gate->add_flag("--strict", opt.strict, "exit 1 when the gate rejects");
  gate->callback([&] { handler = run_gate; });

  auto* greedy = app.add_subcommand(
      "greedy", "dimension ledger of the greedy divisor construction");
  add_common(greedy);
  greedy->callback([&] { handler = run_greedy; });

  auto* strata = app.add_subcommand("strata", "canonical boundary labels (j, mu)");
  add_common(strata);
  strata->callback([&] { handler = run_strata; });

  auto* sigma_cmd = app.add_subcommand("sigma", "sigma coefficient of one stratum");
  add_common(sigma_cmd);
  int j_arg = 0;
  sigma_cmd->add_option("--j", j_arg, "branch points on one component")->required();
  sigma_cmd->add_option("--mu", opt.mu, "partition over the node, e.g. \"2,1\"")
      ->required();
  sigma_cmd->add_option("--chain-file", opt.chain_file, "chain-data JSON file");
  sigma_cmd->callback([&] {
    opt.j = j_arg;
    handler = run_sigma;
  });

  auto* table_cmd = app.add_subcommand("table", "sigma over all canonical strata");
  add_common(table_cmd);
  table_cmd->add_option("--chain-file", opt.chain_file, "chain-data JSON file");
  table_cmd->callback([&] { handler = run_table; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help and friends
    std::cerr << err.what() << "\n";
    return 2;
  }

  try {
    return handler(opt);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
