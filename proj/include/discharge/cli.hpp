#pragma once

// Command-line front end.  Exit codes: 0 = verified / match / clean audit,
// 1 = violations or failed match, 2 = usage or data error.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "discharge/report.hpp"

namespace discharge {

struct RunConfig {
  std::string rules_path;    // empty = embedded table
  std::string configs_path;  // empty = embedded paper-text set
  std::string semantics = "inclusive4";
  bool no_reflection = false;
  int dmax = 20;
  std::string format = "text";
  int jobs = 1;
  bool complete = false;
  long long max_violations = 1000;

  Semantics sem() const {
    return semantics == "strict4" ? Semantics::Strict4 : Semantics::Inclusive4;
  }
  VerifyOptions verify_options() const {
    VerifyOptions o;
    o.semantics = sem();
    o.reflection = !no_reflection;
    o.jobs = jobs;
    o.dmax = dmax;
    o.max_violations = max_violations;
    return o;
  }
};

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline RuleTable load_rule_table(const RunConfig& cfg) {
  if (cfg.rules_path.empty()) return embedded_rules();
  return RuleTable::load(read_file(cfg.rules_path));
}

inline ConfigSet load_config_set(const RunConfig& cfg) {
  if (cfg.configs_path.empty()) return embedded_configs();
  return ConfigSet::load(read_file(cfg.configs_path), cfg.complete);
}

inline int emit_report(const VerificationReport& rep, const RunConfig& cfg,
                       std::ostream& out, std::ostream& err) {
  if (cfg.format == "json")
    out << report_json(rep).dump(2) << "\n";
  else
    out << report_text(rep);
  err << rep.lemma << ": checked " << rep.checked << ", violations "
      << rep.violation_count << " (" << rep.elapsed_seconds << "s)\n";
  return rep.ok() ? 0 : 1;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace cli_detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"discharging verifier for cyclic colorings of plane graphs "
               "with maximum face size six"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  RunConfig cfg;
  app.add_option("--rules", cfg.rules_path, "rule table file (default: embedded)");
  app.add_option("--configs", cfg.configs_path,
                 "reducible configuration file (default: embedded subset)");
  app.add_option("--semantics", cfg.semantics, "matching semantics for '4'")
      ->check(CLI::IsMember({"inclusive4", "strict4"}));
  app.add_flag("--no-reflection", cfg.no_reflection,
               "match patterns up to rotation only");
  app.add_option("--dmax", cfg.dmax, "largest vertex degree checked per profile")
      ->check(CLI::Range(6, 1000));
  app.add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--complete", cfg.complete,
               "assert the configuration file lists all 193 configurations");
  app.add_option("--max-violations", cfg.max_violations,
                 "cap on violations listed in reports");

  auto* check_rules = app.add_subcommand(
      "check-rules", "load the rule table and run the overlap audit");
  auto* verify_vertices_cmd =
      app.add_subcommand("verify-vertices", "final charge of every vertex");
  auto* verify_triangles_cmd =
      app.add_subcommand("verify-triangles", "charge received by every 3-face");
  auto* verify_faces_cmd =
      app.add_subcommand("verify-faces", "net charge sent by 5-/6-faces");
  int face_size = 6;
  verify_faces_cmd->add_option("--size", face_size, "face size to verify")
      ->required()
      ->check(CLI::IsMember({5, 6}));
  auto* match_cmd = app.add_subcommand("match", "match a pattern against a descriptor");
  std::string match_pattern, match_descriptor;
  match_cmd->add_option("pattern", match_pattern)->required();
  match_cmd->add_option("descriptor", match_descriptor)->required();
  auto* explain_cmd =
      app.add_subcommand("explain", "per-slot rule firings of one descriptor");
  std::string explain_descriptor;
  explain_cmd->add_option("descriptor", explain_descriptor)->required();
  auto* dump_rules_cmd = app.add_subcommand("dump-rules", "print the rule table");
  auto* dump_configs_cmd =
      app.add_subcommand("dump-configs", "print the configuration set");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    int code = app.exit(e, msg, msg);
    (code == 0 ? out : err) << msg.str();
    return code == 0 ? 0 : 2;
  }

  try {
    RuleTable table = cli_detail::load_rule_table(cfg);
    cli_detail::Stopwatch watch;

    if (check_rules->parsed()) {
      std::vector<OverlapConflict> conflicts =
          overlap_audit(table, cfg.sem(), !cfg.no_reflection);
      out << table.size() << " rules (" << table.count(RuleKind::T) << " T / "
          << table.count(RuleKind::P) << " P / " << table.count(RuleKind::H)
          << " H), overlap audit: "
          << (conflicts.empty() ? "clean" : std::to_string(conflicts.size()) + " conflicts")
          << "\n";
      for (const OverlapConflict& c : conflicts)
        out << "  " << c.a->text << " vs " << c.b->text << " on " << c.window << "\n";
      err << "check-rules: " << watch.seconds() << "s\n";
      return conflicts.empty() ? 0 : 1;
    }
    if (verify_vertices_cmd->parsed()) {
      ConfigSet exclusions = cfg.configs_path.empty() ? vertex_check_exclusions()
                                                      : cli_detail::load_config_set(cfg);
      VerificationReport rep = verify_vertices(table, exclusions, cfg.verify_options());
      rep.elapsed_seconds = watch.seconds();
      return cli_detail::emit_report(rep, cfg, out, err);
    }
    if (verify_triangles_cmd->parsed()) {
      ConfigSet exclusions = cfg.configs_path.empty() ? triangle_check_exclusions()
                                                      : cli_detail::load_config_set(cfg);
      VerificationReport rep = verify_triangles(table, exclusions, cfg.verify_options());
      rep.elapsed_seconds = watch.seconds();
      return cli_detail::emit_report(rep, cfg, out, err);
    }
    if (verify_faces_cmd->parsed()) {
      ConfigSet configs = cli_detail::load_config_set(cfg);
      VerificationReport rep = verify_faces(face_size, table, configs, cfg.verify_options());
      rep.elapsed_seconds = watch.seconds();
      return cli_detail::emit_report(rep, cfg, out, err);
    }
    if (match_cmd->parsed()) {
      ParsedPattern pat = parse_pattern(match_pattern);
      RingDescriptor ring = decode_ring(match_descriptor);
      bool matched = false;
      if (std::holds_alternative<FacePattern>(pat)) {
        matched = match_ring(std::get<FacePattern>(pat), ring, cfg.sem(),
                             !cfg.no_reflection);
      } else {
        if (ring.size != 6)
          throw std::runtime_error("T patterns apply to 6-face descriptors");
        RuleTable one = RuleTable::load(match_pattern + " 1/60");
        RuleMatcher m(one, cfg.sem(), !cfg.no_reflection);
        for (int e = 0; e < 6 && !matched; ++e)
          matched = is_triangle(ring.ftypes[e]) && m.match(t_window_of(ring, e));
      }
      out << (matched ? "match" : "no match") << "\n";
      return matched ? 0 : 1;
    }
    if (explain_cmd->parsed()) {
      ConfigSet configs = cli_detail::load_config_set(cfg);
      Explanation ex = explain(explain_descriptor, table, configs, cfg.verify_options());
      if (cfg.format == "json")
        out << explanation_json(ex).dump(2) << "\n";
      else
        out << explanation_text(ex);
      return 0;
    }
    if (dump_rules_cmd->parsed()) {
      out << table.serialize();
      err << "rules hash: " << table.content_hash() << "\n";
      return 0;
    }
    if (dump_configs_cmd->parsed()) {
      ConfigSet configs = cli_detail::load_config_set(cfg);
      out << configs.serialize();
      for (const std::string& w : configs.warnings()) err << "warning: " << w << "\n";
      err << "configs hash: " << configs.content_hash() << " ("
          << configs.pre_closure_count() << " listed, " << configs.post_closure_count()
          << " after closure)\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace discharge
