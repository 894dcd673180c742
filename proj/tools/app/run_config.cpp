#include "app/run_config.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "evenfix/errors.hpp"

namespace evenfix::app {

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::build: return "build";
    case Command::analyze: return "analyze";
    case Command::molien: return "molien";
    case Command::cosets: return "cosets";
    case Command::bifurcate: return "bifurcate";
    case Command::certify: return "certify";
  }
  return "?";
}

Sweep parse_sweep(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw ParameterError("sweep must look like a0:a1:steps, got '" + text + "'");
  Sweep s;
  try {
    std::size_t used = 0;
    s.a0 = std::stod(text.substr(0, c1), &used);
    s.a1 = std::stod(text.substr(c1 + 1, c2 - c1 - 1), &used);
    s.steps = std::stoi(text.substr(c2 + 1), &used);
    if (c2 + 1 + used != text.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParameterError("sweep must look like a0:a1:steps, got '" + text + "'");
  }
  if (s.steps < 1) throw ParameterError("sweep needs at least one step");
  return s;
}

namespace {

void usage_error(std::ostream& err, const std::string& message) {
  nlohmann::json doc = {{"schemaVersion", 1}, {"error", {{"kind", "usage"}, {"message", message}}}};
  err << doc.dump() << '\n';
}

}  // namespace

ParseOutcome parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Finite matrix groups without odd-dimensional fixed spaces: construction and certification"};
  cli.require_subcommand(1);
  cli.fallthrough();

  RunConfig cfg;
  std::string sweep;
  std::optional<std::size_t> threads;
  cli.add_option("--seed", cfg.seed, "Random seed for witnesses and sampled checks")->capture_default_str();
  cli.add_option("--threads", threads, "Worker threads (default: EVENFIX_THREADS or 1)")->check(CLI::PositiveNumber);
  cli.add_option("--output,-o", cfg.output, "Write the report to this file instead of stdout");

  auto group_options = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "Group family")->check(CLI::IsMember({"g3", "g8"}))->capture_default_str();
    sub->add_option("--m", cfg.m, "G3 parameter (odd, >= 3)");
    sub->add_option("--l", cfg.l, "G8 parameter (>= 1)");
    sub->add_option("--root", cfg.root, "Index of the primitive root of unity")->capture_default_str();
  };
  auto group_input = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group_path, "Read a serialized group")->check(CLI::ExistingFile);
  };

  auto* build = cli.add_subcommand("build", "Close a group and print it as JSON");
  group_options(build);
  auto* analyze = cli.add_subcommand("analyze", "Commutant, isotropy lattice and normalizer structure");
  group_options(analyze);
  group_input(analyze);
  auto* molien = cli.add_subcommand("molien", "Equivariant dimensions for degrees 1..d");
  group_options(molien);
  group_input(molien);
  molien->add_option("--degree", cfg.degree, "Largest degree")->capture_default_str();
  molien->add_flag("--basis", cfg.basis, "Also dump the Reynolds basis in the largest degree");
  auto* cosets = cli.add_subcommand("cosets", "Normal forms and coset structure of the abstract group");
  cosets->add_option("--k", cfg.k, "k >= 12 with k = 4 mod 8");
  cosets->add_flag("--commuting", cfg.commuting, "Impose r^2 a = a^s r^2");
  cosets->add_option("--s", cfg.s, "Exponent s for the commuting case");
  cosets->add_flag("--check-tables", cfg.check_tables, "Re-derive the coset tables and diff against fixtures");
  auto* bifurcate = cli.add_subcommand("bifurcate", "Zeros of the phase field on two-dimensional fixed spaces");
  group_options(bifurcate);
  bifurcate->add_option("--a", cfg.a, "Family parameter a (b = 1)")->capture_default_str();
  bifurcate->add_option("--sweep", sweep, "a0:a1:steps; emits CSV");
  auto* certify = cli.add_subcommand("certify", "Run every structural check for one group");
  group_options(certify);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << cli.help();
    return {std::nullopt, exit_pass};
  } catch (const CLI::CallForAllHelp&) {
    out << cli.help("", CLI::AppFormatMode::All);
    return {std::nullopt, exit_pass};
  } catch (const CLI::ParseError& e) {
    usage_error(err, e.what());
    return {std::nullopt, exit_usage};
  }

  const std::pair<CLI::App*, Command> table[] = {{build, Command::build},   {analyze, Command::analyze},
                                                 {molien, Command::molien}, {cosets, Command::cosets},
                                                 {bifurcate, Command::bifurcate}, {certify, Command::certify}};
  for (const auto& [sub, cmd] : table)
    if (sub->parsed()) cfg.command = cmd;
  cfg.threads = threads;
  if (!sweep.empty()) {
    try {
      cfg.sweep = parse_sweep(sweep);
    } catch (const ParameterError& e) {
      usage_error(err, e.what());
      return {std::nullopt, exit_usage};
    }
  }
  return {cfg, exit_pass};
}

}  // namespace evenfix::app
