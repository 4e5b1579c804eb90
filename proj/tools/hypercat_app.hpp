#pragma once

// Argument parsing for the hypercat executable.

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypercat/cli.hpp"

namespace hypercat::cli {

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hyper-Catalan numbers, layered series zeros and Raney words"};
  app.require_subcommand(1);

  std::string format = "text";
  std::size_t max_faces = kDefaultMaxFaces;
  bool float_mode = false;
  app.add_option("--format", format, "Output format: text, json, csv or markdown")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
  app.add_option("--max-faces", max_faces, "Face cap for subdigon enumeration");
  auto* exact_flag = app.add_flag("--exact", "Exact rational evaluation (default)");
  app.add_flag("--float", float_mode, "Floating point evaluation")->excludes(exact_flag);

  // coeff
  auto* coeff = app.add_subcommand("coeff", "Hyper-Catalan number and V/E/F of a type");
  std::string coeff_type;
  bool coeff_central = false;
  std::optional<std::size_t> coeff_power;
  coeff->add_option("--type", coeff_type, "Type vector m2,m3,...")->required();
  coeff->add_flag("--central", coeff_central, "Also print the central-polygon split");
  coeff->add_option("--power", coeff_power, "Also print the coefficient of t^m in S^r")
      ->check(CLI::PositiveNumber);

  // table / verify share a layer spec
  struct SpecArgs {
    std::string measure;
    std::size_t level = 0;
    std::optional<unsigned> q;
  };
  auto add_spec = [](CLI::App* sub, SpecArgs& args) {
    sub->add_option("--measure", args.measure, "vertex, edge or face")->required();
    sub->add_option("--level", args.level, "Maximum level d")->required();
    sub->add_option("--q", args.q, "Gon bound q (required for face)");
  };
  auto to_spec = [](const SpecArgs& args) {
    LayerSpec spec{parse_measure(args.measure), args.level, std::nullopt};
    if (args.q) spec.gon_bound = *args.q;
    spec.validate();
    return spec;
  };

  auto* table = app.add_subcommand("table", "Layer table of t_n beta^n slices and totals");
  SpecArgs table_args;
  add_spec(table, table_args);

  auto* verify = app.add_subcommand("verify", "Check the geometric polynomial vanishes on the layered zero");
  SpecArgs verify_args;
  add_spec(verify, verify_args);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Evaluate the layered series zero at numeric t_k");
  SpecArgs solve_args;
  std::vector<std::string> solve_t;
  add_spec(solve_cmd, solve_args);
  solve_cmd->add_option("--t", solve_t, "Coefficients t2 t3 ... (fractions or decimals)")
      ->required()
      ->delimiter(',');

  // subdigons
  auto* subdigons = app.add_subcommand("subdigons", "Count, list or export subdigons of a type");
  std::string sub_type;
  std::string sub_mode = "count";
  subdigons->add_option("--type", sub_type, "Type vector m2,m3,...")->required();
  subdigons->add_option("--mode", sub_mode, "count, list or json")->check(CLI::IsMember({"count", "list", "json"}));

  // raney
  auto* raney_cmd = app.add_subcommand("raney", "Raney string tools");
  raney_cmd->require_subcommand(1);
  std::string raney_input;
  std::optional<std::size_t> raney_n;
  bool raney_cyclic = false;
  bool raney_trace = false;
  auto* r_rank = raney_cmd->add_subcommand("rank", "Rank of a string");
  r_rank->add_option("string", raney_input)->required();
  auto* r_check = raney_cmd->add_subcommand("check", "Word / list test");
  r_check->add_option("string", raney_input)->required();
  r_check->add_option("--n", raney_n, "Test for a list of n words")->check(CLI::PositiveNumber);
  auto* r_rot = raney_cmd->add_subcommand("rotations", "Rotations that are lists of n words");
  r_rot->add_option("string", raney_input)->required();
  auto* r_identify = raney_cmd->add_subcommand("identify", "Bracket the identified words");
  r_identify->add_option("string", raney_input)->required();
  r_identify->add_flag("--cyclic", raney_cyclic, "Treat the string as circular");
  r_identify->add_flag("--trace", raney_trace, "Print the string after each grouping round");
  auto* r_enum = raney_cmd->add_subcommand("enumerate", "All lists of n words of a composition");
  std::size_t enum_n = 1;
  std::vector<std::size_t> enum_m(10, 0);
  std::string enum_tail;
  r_enum->add_option("--n", enum_n, "Number of words")->check(CLI::PositiveNumber);
  for (std::size_t k = 1; k <= 9; ++k) {
    r_enum->add_option("--m" + std::to_string(k), enum_m[k], "Count of symbol " + std::to_string(k));
  }
  r_enum->add_option("--tail", enum_tail, "Counts m2,m3,... as a type vector (added to --mK)");

  // powers
  auto* powers = app.add_subcommand("powers", "Powers of the Catalan generating series");
  std::size_t pow_r = 1;
  std::size_t pow_m = 10;
  std::size_t pow_order = 20;
  powers->add_option("--r", pow_r, "Power r")->required()->check(CLI::PositiveNumber);
  powers->add_option("--m", pow_m, "Print C^(r)_m for m = 0..M");
  powers->add_option("--order", pow_order, "Check the P_r/Q_r identity through this degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Options opts;
  opts.max_faces = max_faces;
  opts.exact = !float_mode;

  try {
    if (*coeff) {
      opts.format = parse_format(format);
      return cmd_coeff(parse_type_vector(coeff_type), coeff_central, coeff_power, opts, out);
    }
    if (*table) {
      // Tables default to CSV; --format text prints "[v^n] source = poly" lines.
      opts.format = app.count("--format") ? parse_format(format) : Format::Csv;
      return cmd_table(to_spec(table_args), opts, out);
    }
    if (*verify) {
      opts.format = parse_format(format);
      return cmd_verify(to_spec(verify_args), opts, out);
    }
    if (*solve_cmd) {
      opts.format = parse_format(format);
      SolveRequest req;
      for (const auto& t : solve_t) req.coeffs.push_back(parse_rational(t));
      req.spec = LayerSpec{parse_measure(solve_args.measure), solve_args.level, std::nullopt};
      if (solve_args.q) req.spec.gon_bound = *solve_args.q;
      req.exact = opts.exact;
      return cmd_solve(req, opts, out);
    }
    if (*subdigons) {
      opts.format = parse_format(format);
      const auto mode = sub_mode == "list"   ? SubdigonMode::List
                        : sub_mode == "json" ? SubdigonMode::Json
                                             : SubdigonMode::Count;
      return cmd_subdigons(parse_type_vector(sub_type), mode, opts, out);
    }
    if (*raney_cmd) {
      opts.format = parse_format(format);
      if (*r_enum) {
        TypeVector tail = parse_type_vector(enum_tail);
        for (Gon k = 2; k <= 9; ++k) tail.add(k, static_cast<Count>(enum_m[k]));
        return cmd_raney_enumerate(enum_n, enum_m[1], tail, opts, out);
      }
      const auto s = raney::parse_string(raney_input);
      if (*r_rank) return cmd_raney_rank(s, out);
      if (*r_check) return cmd_raney_check(s, raney_n, opts, out);
      if (*r_rot) return cmd_raney_rotations(s, opts, out);
      if (*r_identify) return cmd_raney_identify(s, raney_cyclic, raney_trace, opts, out);
    }
    if (*powers) {
      opts.format = parse_format(format);
      return cmd_powers(pow_r, pow_m, pow_order, opts, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hypercat::cli
