#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "ew/cli.hpp"
#include "ew/errors.hpp"

namespace ew::cli {
namespace {

void add_group_option(CLI::App* cmd, std::string& group, bool required) {
  auto* opt = cmd->add_option("-g,--group", group, "Cartan type: A<n>, D<n> (n >= 4), E6, E7, E8");
  if (required) opt->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degenerate Whittaker coefficients of Eisenstein series and Whittaker-pair tools", "ewhit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file whose [coeff], [table], [orbit], [pair] sections mirror the flags");

  JobSpec job;
  std::string format = "text", strategy = "levi-pruned", group, table_group;
  app.add_option("-f,--format", format, "Output format: text, latex (coeff only) or json")->capture_default_str();

  auto* coeff = app.add_subcommand("coeff", "Degenerate Whittaker coefficient and Eulerianity verdicts");
  add_group_option(coeff, group, true);
  coeff->add_option("-n,--node", job.node, "Inducing node i* of lambda = 2s*Lambda_i* - rho")->required();
  coeff->add_option("--support", job.support, "Character support, e.g. 6:m,8:n");
  coeff->add_option("-s,--s", job.s_values, "Points for verdicts: rational p/q or 'generic' (repeatable)");
  coeff->add_option("--strategy", strategy, "levi-pruned or exhaustive")->capture_default_str();
  coeff->add_option("--threads", job.threads, "Worker threads for term construction")->capture_default_str();
  coeff->add_flag("--constant-term", job.constant_term, "Constant term along the Borel instead of a coefficient");
  coeff->add_option("--eval", job.eval_points, "Real points for numeric evaluation (repeatable)");
  coeff->add_option("--charges", job.charges, "Charge bindings for --eval, e.g. m=1,n=-2");

  auto* table = app.add_subcommand("table", "Reproduce the realization and GK-dimension tables");
  table->add_option("which", job.table, "realizations or gkdims")->required();
  table->add_option("-g,--group", table_group, "Restrict realizations to one group");
  table->add_option("--threads", job.threads, "Worker threads for term construction");

  auto* orbit = app.add_subcommand("orbit", "Nilpotent orbit catalog lookups");
  add_group_option(orbit, group, true);
  orbit->add_option("-p,--partition", job.partition, "Partition, e.g. 31111111 or [3,1^7]");
  orbit->add_option("-l,--label", job.label, "Catalog label or Bala-Carter label, e.g. \"(2A1)'\" or [2^4]_I");
  orbit->add_flag("--verify", job.verify, "Recompute the dimension from the centralizer of a representative");

  auto* pair = app.add_subcommand("pair", "Whittaker pair analysis");
  add_group_option(pair, group, true);
  pair->add_option("--neutral", job.neutral, "Neutral pair on orthogonal simple roots, node:charge list");
  pair->add_option("--S", job.pair_s, "alpha_i(S) values, comma separated");
  pair->add_option("--phi", job.phi, "f_phi support: node:charge or a.b.c:charge (minus that positive root)");
  pair->add_option("--dominates", job.dominates, "Does the pair dominate (S', phi)? alpha_i(S') values");
  pair->add_option("--shift", job.shift, "Same, with S' = S + Z given by alpha_i(Z) values");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ewhit: " << e.what() << "\n";
    return kValidation;
  }

  try {
    job.format = parse_format(format);
    job.strategy = parse_strategy(strategy);
    if (!group.empty()) job.group = CartanType::parse(group);
    if (!table_group.empty()) job.table_group = CartanType::parse(table_group);
    if (job.format == Format::Latex && !coeff->parsed()) throw ValidationError("latex output is only for coeff");
    if (coeff->parsed()) {
      job.command = "coeff";
      return cmd_coeff(job, out);
    }
    if (table->parsed()) {
      job.command = "table";
      return cmd_table(job, out);
    }
    if (orbit->parsed()) {
      job.command = "orbit";
      return cmd_orbit(job, out);
    }
    job.command = "pair";
    return cmd_pair(job, out);
  } catch (const PoleError& e) {
    err << "ewhit: pole: " << e.what() << "\n";
    return kPole;
  } catch (const InfeasibleStrategy& e) {
    err << "ewhit: infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "ewhit: invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::out_of_range& e) {
    err << "ewhit: invalid input (number out of range): " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "ewhit: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace ew::cli
