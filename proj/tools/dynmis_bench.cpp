// Benchmark harness: generate update streams, replay them through the MIS
// maintainers with optional per-event verification, and emit work-unit
// metrics (CSV per update, JSON summary).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynmis/generators.hpp"
#include "dynmis/run.hpp"

namespace {

using nlohmann::json;
using namespace dynmis;

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_verify_failure = 2;
constexpr int exit_internal_error = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

struct scenario_flags {
  std::string stream_path;
  bool verify = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> lambda;
  std::optional<double> c_high;
  double c_T = 1.0;
  double c_replace = 22.0;
  double c_feasible = 5.0;
  std::string metrics_path;
  std::string summary_path;
};

run_report run_algorithm(const std::string& alg, const update_stream& stream,
                         const scenario_flags& fl) {
  replay_options opt;
  opt.verify = fl.verify;
  if (alg == "naive") return run_naive(stream, opt);
  if (alg == "det") {
    det_config cfg;
    if (fl.c_high) cfg.c_high = *fl.c_high;
    return run_det(stream, cfg, opt);
  }
  if (alg == "rand") {
    rand_config cfg;
    if (!fl.seed) throw CLI::ValidationError("--seed", "rand requires a seed");
    cfg.seed = *fl.seed;
    if (fl.c_high) cfg.c_high = *fl.c_high;
    return run_rand(stream, cfg, opt);
  }
  if (alg == "arb") {
    arb_config cfg;
    if (!fl.lambda) throw CLI::ValidationError("--lambda", "arb requires lambda");
    cfg.lambda = *fl.lambda;
    if (fl.c_high) cfg.c_high = *fl.c_high;
    cfg.c_T = fl.c_T;
    cfg.c_replace = fl.c_replace;
    cfg.c_feasible = fl.c_feasible;
    return run_arb(stream, cfg, opt);
  }
  throw CLI::ValidationError("--alg", "unknown algorithm '" + alg + "'");
}

json config_echo(const std::string& alg, const scenario_flags& fl) {
  json cfg;
  cfg["alg"] = alg;
  if (fl.seed) cfg["seed"] = *fl.seed;
  if (fl.lambda) cfg["lambda"] = *fl.lambda;
  if (fl.c_high) cfg["c_high"] = *fl.c_high;
  cfg["c_T"] = fl.c_T;
  cfg["c_replace"] = fl.c_replace;
  cfg["c_feasible"] = fl.c_feasible;
  cfg["verify"] = fl.verify;
  return cfg;
}

json summary_json(const run_report& rep, const json& cfg) {
  const run_summary& s = rep.summary;
  json j;
  j["algorithm"] = rep.algorithm;
  j["n"] = rep.n;
  j["events"] = s.events;
  j["config"] = cfg;
  j["totals"] = {{"update_work", s.update_work},
                 {"rebuild_work", s.rebuild_work},
                 {"total_work", s.total_work},
                 {"update_flips", s.update_flips},
                 {"rebuild_flips", s.rebuild_flips}};
  j["amortized_update_work"] = format_fixed(s.amortized_update_work);
  j["amortized_total_work"] = format_fixed(s.amortized_total_work);
  j["max_update_work"] = s.max_update_work;
  j["epochs"] = s.epochs;
  j["fallbacks"] = s.fallbacks;
  j["verify"] = {{"enabled", rep.verify_enabled}, {"ok", rep.verify_ok}};
  if (!rep.verify_ok) {
    j["verify"]["failed_event"] = rep.failed_event;
    j["verify"]["failure"] = rep.failure;
  }
  return j;
}

int cmd_gen(const std::string& kind, std::size_t n, std::size_t steps,
            double p_insert, std::uint64_t seed, std::size_t s,
            std::size_t rounds, int lambda, const std::string& out_path) {
  update_stream stream;
  if (kind == "random") {
    stream = gen_random_stream(n, steps, p_insert, seed);
  } else if (kind == "bipartite-adv") {
    stream = gen_bipartite_adversary(s, rounds);
  } else if (kind == "arboricity") {
    stream = gen_bounded_arboricity_stream(n, lambda, steps, seed);
  } else {
    std::cerr << "unknown generator kind '" << kind << "'\n";
    return exit_input_error;
  }
  const std::string text = serialize_stream(stream);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  std::cerr << stream.events.size() << " events on " << stream.n
            << " vertices\n";
  return exit_ok;
}

int cmd_run(const std::string& alg, const scenario_flags& fl) {
  update_stream stream;
  try {
    stream = parse_stream(read_file(fl.stream_path));
  } catch (const std::exception& e) {
    std::cerr << "stream error: " << e.what() << "\n";
    return exit_input_error;
  }
  run_report rep = run_algorithm(alg, stream, fl);
  if (!fl.metrics_path.empty()) write_file(fl.metrics_path, metrics_csv(rep));
  json j = summary_json(rep, config_echo(alg, fl));
  if (!fl.summary_path.empty()) {
    write_file(fl.summary_path, j.dump(2) + "\n");
  }
  std::cout << j.dump(2) << "\n";
  if (!rep.verify_ok) {
    std::cerr << "verification failed at event " << rep.failed_event << ": "
              << rep.failure << "\n";
    return exit_verify_failure;
  }
  return exit_ok;
}

int cmd_compare(const std::vector<std::string>& algs,
                const scenario_flags& fl, const std::string& out_csv) {
  update_stream stream;
  try {
    stream = parse_stream(read_file(fl.stream_path));
  } catch (const std::exception& e) {
    std::cerr << "stream error: " << e.what() << "\n";
    return exit_input_error;
  }
  std::string csv =
      "algorithm,events,update_work,rebuild_work,total_work,"
      "amortized_update_work,amortized_total_work,max_update_work,epochs,"
      "fallbacks,verified\n";
  std::printf("%-8s %10s %12s %12s %14s %14s %12s\n", "alg", "events",
              "upd work", "rebuild", "amort upd", "amort total", "max upd");
  bool all_ok = true;
  for (const std::string& alg : algs) {
    run_report rep = run_algorithm(alg, stream, fl);
    const run_summary& s = rep.summary;
    all_ok = all_ok && rep.verify_ok;
    csv += rep.algorithm + ',' + std::to_string(s.events) + ',' +
           std::to_string(s.update_work) + ',' +
           std::to_string(s.rebuild_work) + ',' +
           std::to_string(s.total_work) + ',' +
           format_fixed(s.amortized_update_work) + ',' +
           format_fixed(s.amortized_total_work) + ',' +
           std::to_string(s.max_update_work) + ',' +
           std::to_string(s.epochs) + ',' + std::to_string(s.fallbacks) +
           ',' + (rep.verify_enabled ? (rep.verify_ok ? "ok" : "FAIL") : "off") +
           '\n';
    std::printf("%-8s %10llu %12llu %12llu %14.3f %14.3f %12llu%s\n",
                rep.algorithm.c_str(),
                static_cast<unsigned long long>(s.events),
                static_cast<unsigned long long>(s.update_work),
                static_cast<unsigned long long>(s.rebuild_work),
                s.amortized_update_work, s.amortized_total_work,
                static_cast<unsigned long long>(s.max_update_work),
                rep.verify_enabled && !rep.verify_ok ? "  VERIFY-FAIL" : "");
  }
  if (!out_csv.empty()) write_file(out_csv, csv);
  return all_ok ? exit_ok : exit_verify_failure;
}

int cmd_verify(const std::string& path) {
  try {
    update_stream stream = parse_stream(read_file(path));
    replay_stream(stream);
  } catch (const std::exception& e) {
    std::cerr << "invalid stream: " << e.what() << "\n";
    return exit_input_error;
  }
  std::cout << "ok\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic MIS benchmark harness"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an update stream");
  std::string gen_kind;
  std::size_t gen_n = 16, gen_steps = 100, gen_s = 4, gen_rounds = 10;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 1;
  int gen_lambda = 0;
  std::string gen_out;
  gen->add_option("kind", gen_kind, "random | bipartite-adv | arboricity")
      ->required();
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--steps", gen_steps, "number of events");
  gen->add_option("--p-insert", gen_p, "insert probability");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--s", gen_s, "bipartite side size");
  gen->add_option("--rounds", gen_rounds, "adversary rounds");
  gen->add_option("--lambda", gen_lambda, "arboricity bound");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // shared scenario flags
  scenario_flags fl;
  std::string run_alg;
  std::vector<std::string> cmp_algs;
  std::string cmp_out;
  std::uint64_t seed_opt = 0;
  int lambda_opt = 0;
  double c_high_opt = 0.0;

  auto add_scenario_flags = [&](CLI::App* cmd) {
    cmd->add_option("--stream", fl.stream_path, "stream file")->required();
    cmd->add_flag("--verify", fl.verify, "oracle check after every event");
    cmd->add_option("--seed", seed_opt, "PRNG seed (rand)");
    cmd->add_option("--lambda", lambda_opt, "arboricity bound (arb)");
    cmd->add_option("--c-high", c_high_opt, "high-degree threshold scale");
    cmd->add_option("--c-T", fl.c_T, "epoch length scale (arb)");
    cmd->add_option("--c-replace", fl.c_replace, "replacement budget scale (arb)");
    cmd->add_option("--c-feasible", fl.c_feasible, "feasibility floor scale (arb)");
  };

  auto* run = app.add_subcommand("run", "replay a stream through one algorithm");
  run->add_option("--alg", run_alg, "naive | det | rand | arb")->required();
  add_scenario_flags(run);
  run->add_option("--metrics", fl.metrics_path, "per-update CSV path");
  run->add_option("--summary", fl.summary_path, "JSON summary path");

  auto* cmp = app.add_subcommand("compare", "run several algorithms on one stream");
  cmp->add_option("--alg", cmp_algs, "algorithm (repeatable)")->required();
  add_scenario_flags(cmp);
  cmp->add_option("--out", cmp_out, "comparison CSV path");

  auto* ver = app.add_subcommand("verify", "parse and replay a stream");
  std::string ver_path;
  ver->add_option("stream", ver_path, "stream file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (gen_kind == "arboricity" && gen_lambda < 1) {
        std::cerr << "arboricity generator requires --lambda >= 1\n";
        return exit_input_error;
      }
      return cmd_gen(gen_kind, gen_n, gen_steps, gen_p, gen_seed, gen_s,
                     gen_rounds, gen_lambda, gen_out);
    }
    // flags present only when the user passed them
    if (run->parsed() || cmp->parsed()) {
      CLI::App* cmd = run->parsed() ? run : cmp;
      if (cmd->count("--seed")) fl.seed = seed_opt;
      if (cmd->count("--lambda")) fl.lambda = lambda_opt;
      if (cmd->count("--c-high")) fl.c_high = c_high_opt;
    }
    if (run->parsed()) return cmd_run(run_alg, fl);
    if (cmp->parsed()) return cmd_compare(cmp_algs, fl, cmp_out);
    if (ver->parsed()) return cmd_verify(ver_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return exit_input_error;
  } catch (const internal_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return exit_internal_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return exit_input_error;
  }
  return exit_ok;
}
